#include "hgcrp/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
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

std::vector<int> parse_int_list(const std::string& text, int line_no) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = strip(tok);
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            out.push_back(static_cast<int>(v));
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed index '" + tok + "'");
        }
    }
    return out;
}

// std::uniform_int_distribution is implementation-defined; this keeps
// generated instances byte-identical across compilers.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Exact Bernoulli draw with rational probability.
bool bernoulli(std::mt19937_64& rng, const Utility& p) {
    return static_cast<std::int64_t>(next_below(rng, static_cast<std::uint64_t>(p.den()))) <
           p.num();
}

}  // namespace

void validate_spec(const SetCoverSpec& spec) {
    if (spec.universe_size < 1) throw ValidationError("universe must be non-empty");
    for (const auto& s : spec.subsets) {
        if (s.empty()) throw ValidationError("empty subset in set system");
        for (int e : s) {
            if (e < 0 || e >= spec.universe_size) {
                throw ValidationError("subset element " + std::to_string(e) + " out of range");
            }
        }
        std::set<int> uniq(s.begin(), s.end());
        if (uniq.size() != s.size()) throw ValidationError("duplicate element in subset");
    }
}

void validate_spec(const GraphSpec& spec) {
    if (spec.vertex_count < 1) throw ValidationError("graph must have a vertex");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : spec.edges) {
        if (u < 0 || v < 0 || u >= spec.vertex_count || v >= spec.vertex_count) {
            throw ValidationError("edge endpoint out of range");
        }
        if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second) {
            throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        }
    }
}

SetCoverSpec parse_set_cover(std::istream& in) {
    SetCoverSpec spec;
    std::string raw;
    int line_no = 0;
    bool saw_universe = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (!saw_universe) {
            std::istringstream ss(line);
            std::string kw;
            ss >> kw >> spec.universe_size;
            if (kw != "universe" || ss.fail()) {
                throw ParseError(line_no, "expected 'universe <n>'");
            }
            saw_universe = true;
        } else if (line.rfind("subset:", 0) == 0) {
            spec.subsets.push_back(parse_int_list(strip(line.substr(7)), line_no));
        } else {
            throw ParseError(line_no, "expected 'subset: i,j,k'");
        }
    }
    if (!saw_universe) throw ParseError("missing 'universe <n>' line");
    validate_spec(spec);
    return spec;
}

SetCoverSpec parse_set_cover(const std::string& text) {
    std::istringstream ss(text);
    return parse_set_cover(ss);
}

SetCoverSpec load_set_cover(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_set_cover(in);
}

GraphSpec parse_graph(std::istream& in) {
    GraphSpec spec;
    std::string raw;
    int line_no = 0;
    bool saw_vertices = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (!saw_vertices) {
            std::istringstream ss(line);
            std::string kw;
            ss >> kw >> spec.vertex_count;
            if (kw != "vertices" || ss.fail()) {
                throw ParseError(line_no, "expected 'vertices <n>'");
            }
            saw_vertices = true;
        } else if (line.rfind("edge:", 0) == 0) {
            auto ends = parse_int_list(strip(line.substr(5)), line_no);
            if (ends.size() != 2) throw ParseError(line_no, "edge needs exactly two endpoints");
            spec.edges.emplace_back(ends[0], ends[1]);
        } else {
            throw ParseError(line_no, "expected 'edge: u,v'");
        }
    }
    if (!saw_vertices) throw ParseError("missing 'vertices <n>' line");
    validate_spec(spec);
    return spec;
}

GraphSpec parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

GraphSpec load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_graph(in);
}

Instance from_exact_cover(const SetCoverSpec& spec) {
    validate_spec(spec);
    std::map<Coalition, Utility> ircl;
    for (int i = 0; i < spec.universe_size; ++i) {
        ircl.emplace(Coalition::singleton(i), Utility(1));
    }
    // Family subsets get 2; a subset that is itself a singleton overrides the
    // default singleton value (the larger value wins).
    for (const auto& s : spec.subsets) {
        ircl.insert_or_assign(Coalition(s), Utility(2));
    }
    return Instance(spec.universe_size, std::move(ircl));
}

std::vector<std::optional<Coalition>> vertex_coalitions(const GraphSpec& spec) {
    std::vector<std::vector<int>> incident(spec.vertex_count);
    for (size_t k = 0; k < spec.edges.size(); ++k) {
        incident[spec.edges[k].first].push_back(static_cast<int>(k));
        incident[spec.edges[k].second].push_back(static_cast<int>(k));
    }
    std::vector<std::optional<Coalition>> out(spec.vertex_count);
    for (int v = 0; v < spec.vertex_count; ++v) {
        if (!incident[v].empty()) out[v] = Coalition(incident[v]);
    }
    return out;
}

Instance from_independent_set(const GraphSpec& spec, std::optional<Utility> eps) {
    validate_spec(spec);
    const int m = static_cast<int>(spec.edges.size());
    if (m == 0) throw ValidationError("graph has no edges; the reduction needs an agent per edge");
    Utility cap = Utility(1) / Utility(static_cast<std::int64_t>(m) * m);
    Utility e = eps.value_or(cap);
    if (!(Utility(0) < e) || cap < e) {
        throw ValidationError("eps must satisfy 0 < eps <= 1/|E|^2");
    }
    std::map<Coalition, Utility> ircl;
    for (int i = 0; i < m; ++i) ircl.emplace(Coalition::singleton(i), e);
    for (const auto& cv : vertex_coalitions(spec)) {
        if (!cv) continue;
        // Degree-1 vertices give singleton coalitions of value 1 >= eps;
        // the reduction's value wins.
        ircl.insert_or_assign(*cv, Utility(1) / Utility(cv->size()));
    }
    // A vertex coalition containing an edge-agent whose own singleton was
    // raised to 1 is not individually rational and is omitted from the list.
    // Such a coalition is strictly dominated by splitting it into singletons,
    // so the omission leaves every optimum intact.
    for (auto it = ircl.begin(); it != ircl.end();) {
        bool ir = true;
        if (it->first.size() > 1) {
            for (AgentId a : it->first.members()) {
                if (it->second < ircl.at(Coalition::singleton(a))) {
                    ir = false;
                    break;
                }
            }
        }
        it = ir ? std::next(it) : ircl.erase(it);
    }
    return Instance(m, std::move(ircl));
}

Instance pos_family(int n, const Utility& eps) {
    if (n < 2) throw ValidationError("pos_family needs n >= 2");
    if (!(Utility(0) < eps)) throw ValidationError("pos_family needs eps > 0");
    std::map<Coalition, Utility> ircl;
    ircl.emplace(Coalition::singleton(0), Utility(1) + eps);
    for (int i = 1; i < n; ++i) ircl.emplace(Coalition::singleton(i), Utility(0));
    std::vector<AgentId> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    ircl.emplace(Coalition(all), Utility(1));
    return Instance(n, std::move(ircl), /*allow_non_ir=*/true);
}

Instance random_instance(int n, int max_size, const Utility& density, int max_den,
                         std::uint64_t seed) {
    if (n < 1) throw ValidationError("random_instance needs n >= 1");
    if (max_size < 1 || max_size > n) throw ValidationError("need 1 <= max_size <= n");
    if (density.is_negative() || Utility(1) < density) {
        throw ValidationError("density must be in [0, 1]");
    }
    if (max_den < 1) throw ValidationError("max_den must be positive");

    std::mt19937_64 rng(seed);
    std::map<Coalition, Utility> ircl;
    std::vector<Utility> singleton(n);
    for (int i = 0; i < n; ++i) {
        std::int64_t q = uniform_int(rng, 1, max_den);
        std::int64_t p = uniform_int(rng, 0, 4 * q);
        singleton[i] = Utility(p, q);
        ircl.emplace(Coalition::singleton(i), singleton[i]);
    }

    std::int64_t candidates = 0;
    std::vector<int> members;
    auto grow = [&](auto&& self, int next) -> void {
        int size = static_cast<int>(members.size());
        if (size >= 2) {
            if (++candidates > 1'000'000) {
                throw ValidationError("random_instance: too many candidate coalitions");
            }
            if (bernoulli(rng, density)) {
                Utility m = singleton[members[0]];
                for (int a : members) m = std::max(m, singleton[a]);
                std::int64_t q = uniform_int(rng, 1, max_den);
                std::int64_t k = uniform_int(rng, 0, 4 * q);
                ircl.emplace(Coalition(members), m + Utility(k, q));
            }
        }
        if (size == max_size) return;
        for (int a = next; a < n; ++a) {
            members.push_back(a);
            self(self, a + 1);
            members.pop_back();
        }
    };
    grow(grow, 0);
    return Instance(n, std::move(ircl));
}

}  // namespace hgcrp
