#include "gammakit/coeff_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace gammakit {

namespace {

constexpr int kRecordDigits = 36;
constexpr const char* kHeader = "gammakit-coefficients v1";

// Parsing precision: comfortably above the 36 recorded digits.
const PrecisionContext kParseCtx{50};

std::string generator_name(NodeSet::Generator g) {
    switch (g) {
        case NodeSet::Generator::integers: return "integers";
        case NodeSet::Generator::custom: return "custom";
        case NodeSet::Generator::chebyshev_mapped: return "chebyshev_mapped";
        case NodeSet::Generator::geometric: return "geometric";
        case NodeSet::Generator::least_squares_range: return "least_squares_range";
    }
    throw argument_error("unknown node generator");
}

NodeSet::Generator generator_from_name(const std::string& s) {
    for (auto g : {NodeSet::Generator::integers, NodeSet::Generator::custom,
                   NodeSet::Generator::chebyshev_mapped, NodeSet::Generator::geometric,
                   NodeSet::Generator::least_squares_range})
        if (generator_name(g) == s) return g;
    throw argument_error("coefficient record: unknown node generator '" + s + "'");
}

std::vector<BigReal> parse_list(const std::string& text) {
    std::vector<BigReal> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(BigReal::from_string(item, kParseCtx));
    return out;
}

}  // namespace

void write_coefficients(const PoleExpansion& e, std::ostream& out) {
    e.validate();
    out << kHeader << "\n";
    out << "method " << method_name(e.method) << "\n";
    out << "n " << e.n_poles << "\n";
    out << "r " << e.r.str(kRecordDigits) << "\n";
    if (!e.r_target)
        out << "r_target explicit\n";
    else if (e.r_target->is_infinity())
        out << "r_target inf\n";
    else
        out << "r_target zbar " << e.r_target->zbar().str(kRecordDigits) << "\n";
    if (e.nodes) {
        out << "node_generator " << generator_name(e.nodes->generator()) << "\n";
        out << "nodes ";
        bool first = true;
        for (const BigReal& p : e.nodes->points()) {
            if (!first) out << ",";
            out << p.str(kRecordDigits);
            first = false;
        }
        out << "\n";
    }
    out << "c_inf " << e.c_inf.str(kRecordDigits) << "\n";
    for (int n = 0; n < e.n_poles; ++n)
        out << "c_" << n << " " << e.c[static_cast<size_t>(n)].str(kRecordDigits) << "\n";
}

std::string coefficients_record(const PoleExpansion& e) {
    std::ostringstream out;
    write_coefficients(e, out);
    return out.str();
}

PoleExpansion parse_coefficients(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw argument_error("coefficient record: missing header line");

    std::map<std::string, std::string> fields;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        auto space = line.find(' ');
        if (space == std::string::npos)
            throw argument_error("coefficient record: malformed line '" + line + "'");
        fields[line.substr(0, space)] = line.substr(space + 1);
    }

    auto need = [&](const std::string& key) -> const std::string& {
        auto it = fields.find(key);
        if (it == fields.end())
            throw argument_error("coefficient record: missing field '" + key + "'");
        return it->second;
    };

    PoleExpansion e;
    e.method = method_from_name(need("method"));
    e.n_poles = std::stoi(need("n"));
    e.r = BigReal::from_string(need("r"), kParseCtx);
    const std::string& target = need("r_target");
    if (target == "explicit")
        e.r_target = std::nullopt;
    else if (target == "inf")
        e.r_target = RTarget::infinity();
    else if (target.rfind("zbar ", 0) == 0)
        e.r_target = RTarget::finite(BigReal::from_string(target.substr(5), kParseCtx));
    else
        throw argument_error("coefficient record: bad r_target '" + target + "'");

    if (auto it = fields.find("nodes"); it != fields.end())
        e.nodes = NodeSet(parse_list(it->second), generator_from_name(need("node_generator")));

    e.c_inf = BigReal::from_string(need("c_inf"), kParseCtx);
    e.c.reserve(static_cast<size_t>(e.n_poles));
    for (int n = 0; n < e.n_poles; ++n)
        e.c.push_back(BigReal::from_string(need("c_" + std::to_string(n)), kParseCtx));
    e.validate();
    return e;
}

PoleExpansion parse_coefficients_string(const std::string& text) {
    std::istringstream in(text);
    return parse_coefficients(in);
}

PoleExpansion load_coefficients_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw argument_error("cannot open coefficient file '" + path + "'");
    return parse_coefficients(in);
}

}  // namespace gammakit
