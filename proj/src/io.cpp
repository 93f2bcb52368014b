#include "hgcrp/io.hpp"

#include <fstream>
#include <sstream>

namespace hgcrp {
namespace {

std::string strip(const std::string& line) {
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
}

// "0,3,7" -> members, strictly ascending required by the format.
std::vector<AgentId> parse_members(const std::string& text, int line_no) {
    std::vector<AgentId> members;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            members.push_back(static_cast<AgentId>(v));
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed agent index '" + tok + "'");
        }
    }
    if (members.empty()) throw ParseError(line_no, "empty member list");
    for (size_t i = 1; i < members.size(); ++i) {
        if (members[i] <= members[i - 1]) {
            throw ParseError(line_no, "members must be strictly ascending");
        }
    }
    return members;
}

Utility parse_utility(const std::string& text, int line_no) {
    try {
        return Utility::parse(text);
    } catch (const OverflowError&) {
        throw ParseError(line_no, "rational overflow in '" + text + "'");
    } catch (const std::exception&) {
        throw ParseError(line_no, "malformed utility '" + text + "'");
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int n = -1;
    bool saw_magic = false;
    bool allow_non_ir = false;
    std::map<Coalition, Utility> ircl;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (!saw_magic) {
            if (line != "hgcrp 1") throw ParseError(line_no, "expected header 'hgcrp 1'");
            saw_magic = true;
            continue;
        }
        if (n < 0) {
            std::istringstream ss(line);
            std::string kw;
            ss >> kw >> n;
            if (kw != "agents" || ss.fail() || n < 1 || !(ss >> std::ws).eof()) {
                throw ParseError(line_no, "expected 'agents <n>'");
            }
            continue;
        }
        if (line == "allow-non-ir") {
            allow_non_ir = true;
            continue;
        }
        size_t sp = line.find(' ');
        if (sp == std::string::npos) {
            throw ParseError(line_no, "expected '<members> <utility>'");
        }
        Coalition coal(parse_members(line.substr(0, sp), line_no));
        Utility util = parse_utility(strip(line.substr(sp + 1)), line_no);
        if (util.is_negative()) throw ParseError(line_no, "negative utility");
        if (!ircl.emplace(coal, util).second) {
            throw ParseError(line_no, "duplicate coalition {" + coal.str() + "}");
        }
    }
    if (!saw_magic) throw ParseError("empty input: expected header 'hgcrp 1'");
    if (n < 0) throw ParseError("missing 'agents <n>' line");
    return Instance(n, std::move(ircl), allow_non_ir);
}

Instance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

Instance load_instance(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
    std::string out = "hgcrp 1\nagents " + std::to_string(inst.agent_count()) + "\n";
    if (inst.allow_non_ir()) out += "allow-non-ir\n";
    for (int idx : inst.size_lex_order()) {
        out += inst.coalition_at(idx).str() + " " + inst.utility_at(idx).str() + "\n";
    }
    return out;
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << serialize_instance(inst);
}

Partition parse_partition(const Instance& inst, std::istream& in) {
    std::string raw;
    int line_no = 0;
    std::vector<Coalition> parts;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        parts.emplace_back(parse_members(line, line_no));
    }
    return Partition(inst, std::move(parts));
}

Partition parse_partition(const Instance& inst, const std::string& text) {
    std::istringstream ss(text);
    return parse_partition(inst, ss);
}

Partition load_partition(const Instance& inst, const std::string& path) {
    auto in = open_or_throw(path);
    return parse_partition(inst, in);
}

std::string serialize_partition(const Partition& pi) {
    std::string out;
    for (const Coalition& c : pi.coalitions()) out += c.str() + "\n";
    return out;
}

void save_partition(const Partition& pi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << serialize_partition(pi);
}

}  // namespace hgcrp
