#include "hgcrp/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace hgcrp {
namespace {

// ---------------------------------------------------------------------------
// Maximum-weight matching on a general graph, primal-dual blossom method in
// the classic formulation (Galil 1986; the array layout follows van
// Rantwijk's widely ported reference). Integer weights only; all dual
// variables and slacks stay integral because slacks between S-vertices are
// always even in this formulation.
//
// Vertices 0..nv-1 are trivial blossoms; ids nv..2*nv-1 are non-trivial
// blossoms. Edge endpoint p encodes edge p/2, side p%2; p^1 is the opposite
// endpoint.
// ---------------------------------------------------------------------------
class BlossomMatcher {
public:
    struct Edge {
        int i;
        int j;
        std::int64_t w;
    };

    BlossomMatcher(int nv, std::vector<Edge> edges) : nv_(nv), edges_(std::move(edges)) {
        ne_ = static_cast<int>(edges_.size());
        endpoint_.resize(2 * ne_);
        neighbend_.assign(nv_, {});
        for (int k = 0; k < ne_; ++k) {
            endpoint_[2 * k] = edges_[k].i;
            endpoint_[2 * k + 1] = edges_[k].j;
            neighbend_[edges_[k].i].push_back(2 * k + 1);
            neighbend_[edges_[k].j].push_back(2 * k);
        }
        maxweight_ = 0;
        for (const Edge& e : edges_) maxweight_ = std::max(maxweight_, e.w);
        mate_.assign(nv_, -1);
        label_.assign(2 * nv_, 0);
        labelend_.assign(2 * nv_, -1);
        inblossom_.resize(nv_);
        for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
        blossomparent_.assign(2 * nv_, -1);
        blossomchilds_.assign(2 * nv_, {});
        blossombase_.resize(2 * nv_);
        for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
        for (int b = nv_; b < 2 * nv_; ++b) blossombase_[b] = -1;
        blossomendps_.assign(2 * nv_, {});
        bestedge_.assign(2 * nv_, -1);
        blossombestedges_.assign(2 * nv_, std::nullopt);
        for (int b = 2 * nv_ - 1; b >= nv_; --b) unusedblossoms_.push_back(b);
        dualvar_.assign(2 * nv_, 0);
        for (int v = 0; v < nv_; ++v) dualvar_[v] = maxweight_;
        allowedge_.assign(ne_, false);
    }

    // Returns matched edge indices; total weight is the sum of their weights.
    std::vector<int> solve() {
        for (int stage = 0; stage < nv_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nv_; b < 2 * nv_; ++b) blossombestedges_[b].reset();
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < nv_; ++v) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        std::int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = true;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                assert(label_[inblossom_[w]] == 2);
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                                bestedge_[b] = k;
                            }
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                                bestedge_[w] = k;
                            }
                        }
                    }
                }
                if (augmented) break;

                // No augmenting path under the current duals; pump slack out.
                int deltatype = 1;
                std::int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                for (int v = 0; v < nv_; ++v) delta = v == 0 ? dualvar_[0] : std::min(delta, dualvar_[v]);
                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        std::int64_t d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nv_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        std::int64_t ks = slack(bestedge_[b]);
                        assert(ks % 2 == 0);
                        std::int64_t d = ks / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }

                if (deltatype == 1) break;  // optimum reached
                if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    int i = edges_[deltaedge].i;
                    if (label_[inblossom_[i]] == 0) i = edges_[deltaedge].j;
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    assert(label_[inblossom_[edges_[deltaedge].i]] == 1);
                    queue_.push_back(edges_[deltaedge].i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = nv_; b < 2 * nv_; ++b) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }

        verify_optimum();

        std::vector<int> matched;
        for (int k = 0; k < ne_; ++k) {
            if (mate_[edges_[k].i] == 2 * k + 1) {
                assert(mate_[edges_[k].j] == 2 * k);
                matched.push_back(k);
            }
        }
        return matched;
    }

private:
    std::int64_t slack(int k) const {
        return dualvar_[edges_[k].i] + dualvar_[edges_[k].j] - 2 * edges_[k].w;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) blossom_leaves(t, out);
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            queue_.insert(queue_.end(), leaves.begin(), leaves.end());
        } else {
            int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    // Trace back from v and w; returns the base of a new blossom or -1 if an
    // augmenting path was discovered instead.
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            assert(labelend_[b] == mate_[blossombase_[b]]);
            if (labelend_[b] == -1) {
                v = -1;  // reached a single vertex
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                assert(labelend_[b] >= 0);
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].i;
        int w = edges_[k].j;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int>& path = blossomchilds_[b];
        std::vector<int>& endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
            assert(labelend_[bv] >= 0);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            assert(label_[bw] == 2 ||
                   (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
            assert(labelend_[bw] >= 0);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int lv : leaves) {
            if (label_[inblossom_[lv]] == 2) queue_.push_back(lv);
            inblossom_[lv] = b;
        }
        // Merge the children's least-slack edge lists.
        std::vector<int> bestedgeto(2 * nv_, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!blossombestedges_[child]) {
                std::vector<int> cleaves;
                blossom_leaves(child, cleaves);
                for (int lv : cleaves) {
                    std::vector<int> ks;
                    ks.reserve(neighbend_[lv].size());
                    for (int p : neighbend_[lv]) ks.push_back(p / 2);
                    nblists.push_back(std::move(ks));
                }
            } else {
                nblists.push_back(*blossombestedges_[child]);
            }
            for (const auto& nblist : nblists) {
                for (int ek : nblist) {
                    int i = edges_[ek].i;
                    int j = edges_[ek].j;
                    if (inblossom_[j] == b) std::swap(i, j);
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(ek) < slack(bestedgeto[bj]))) {
                        bestedgeto[bj] = ek;
                    }
                }
            }
            blossombestedges_[child].reset();
            bestedge_[child] = -1;
        }
        std::vector<int> best;
        for (int ek : bestedgeto) {
            if (ek != -1) best.push_back(ek);
        }
        bestedge_[b] = -1;
        for (int ek : best) {
            if (bestedge_[b] == -1 || slack(ek) < slack(bestedge_[b])) bestedge_[b] = ek;
        }
        blossombestedges_[b] = std::move(best);
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int v : leaves) inblossom_[v] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            // Relabel the sub-blossoms along the path from the entry child to
            // the base; the remaining children become free again.
            assert(labelend_[b] >= 0);
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            const int len = static_cast<int>(blossomchilds_[b].size());
            auto child_at = [&](int j) {
                return blossomchilds_[b][((j % len) + len) % len];
            };
            auto endp_at = [&](int j) {
                return blossomendps_[b][((j % len) + len) % len];
            };
            int j = 0;
            while (blossomchilds_[b][j] != entrychild) ++j;
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endp_at(j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endp_at(j - endptrick) / 2] = true;
                j += jstep;
                p = endp_at(j - endptrick) ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            int bv = child_at(j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (child_at(j) != entrychild) {
                bv = child_at(j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int reached = -1;
                for (int v : leaves) {
                    if (label_[v] != 0) {
                        reached = v;
                        break;
                    }
                }
                if (reached >= 0) {
                    assert(label_[reached] == 2);
                    assert(inblossom_[reached] == bv);
                    label_[reached] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(reached, 2, labelend_[reached]);
                }
                j += jstep;
            }
        }
        label_[b] = -1;
        labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].reset();
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    // Swap matched/unmatched edges over the alternating path through blossom b
    // between vertex v and the base.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= nv_) augment_blossom(t, v);
        const int len = static_cast<int>(blossomchilds_[b].size());
        auto child_at = [&](int j) { return blossomchilds_[b][((j % len) + len) % len]; };
        auto endp_at = [&](int j) { return blossomendps_[b][((j % len) + len) % len]; };
        int i = 0;
        while (blossomchilds_[b][i] != t) ++i;
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = child_at(j);
            int p = endp_at(j - endptrick) ^ endptrick;
            if (t >= nv_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = child_at(j);
            if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i,
                    blossomchilds_[b].end());
        std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i,
                    blossomendps_[b].end());
        blossombase_[b] = blossombase_[blossomchilds_[b][0]];
        assert(blossombase_[b] == v);
    }

    void augment_matching(int k) {
        int v = edges_[k].i;
        int w = edges_[k].j;
        for (auto [s, p] : {std::pair(v, 2 * k + 1), std::pair(w, 2 * k)}) {
            while (true) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert(labelend_[bs] == mate_[blossombase_[bs]]);
                if (bs >= nv_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;  // single vertex: path end
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                assert(labelend_[bt] >= 0);
                s = endpoint_[labelend_[bt]];
                int jv = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= nv_) augment_blossom(bt, jv);
                mate_[jv] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    // Complementary-slackness certificate for the final matching.
    void verify_optimum() const {
        for (int v = 0; v < nv_; ++v) {
            if (dualvar_[v] < 0) throw std::logic_error("matching: negative vertex dual");
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
            if (dualvar_[b] < 0) throw std::logic_error("matching: negative blossom dual");
        }
        for (int k = 0; k < ne_; ++k) {
            std::int64_t s = slack(k);
            std::vector<int> iblossoms{edges_[k].i};
            std::vector<int> jblossoms{edges_[k].j};
            while (blossomparent_[iblossoms.back()] != -1) {
                iblossoms.push_back(blossomparent_[iblossoms.back()]);
            }
            while (blossomparent_[jblossoms.back()] != -1) {
                jblossoms.push_back(blossomparent_[jblossoms.back()]);
            }
            std::reverse(iblossoms.begin(), iblossoms.end());
            std::reverse(jblossoms.begin(), jblossoms.end());
            for (size_t d = 0; d < std::min(iblossoms.size(), jblossoms.size()); ++d) {
                if (iblossoms[d] != jblossoms[d]) break;
                s += 2 * dualvar_[iblossoms[d]];
            }
            if (s < 0) throw std::logic_error("matching: negative edge slack");
            bool m_i = mate_[edges_[k].i] / 2 == k && mate_[edges_[k].i] >= 0;
            bool m_j = mate_[edges_[k].j] / 2 == k && mate_[edges_[k].j] >= 0;
            if (m_i != m_j) throw std::logic_error("matching: inconsistent mates");
            if (m_i && s != 0) throw std::logic_error("matching: matched edge has slack");
        }
        for (int v = 0; v < nv_; ++v) {
            if (mate_[v] == -1 && dualvar_[v] != 0) {
                throw std::logic_error("matching: exposed vertex with positive dual");
            }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
            if (blossombase_[b] >= 0 && dualvar_[b] > 0) {
                if (blossomendps_[b].size() % 2 != 1) {
                    throw std::logic_error("matching: even blossom with positive dual");
                }
                for (size_t idx = 1; idx < blossomendps_[b].size(); idx += 2) {
                    int p = blossomendps_[b][idx];
                    if (mate_[endpoint_[p]] != (p ^ 1) || mate_[endpoint_[p ^ 1]] != p) {
                        throw std::logic_error("matching: positive-dual blossom not full");
                    }
                }
            }
        }
    }

    int nv_;
    int ne_ = 0;
    std::vector<Edge> edges_;
    std::int64_t maxweight_ = 0;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::optional<std::vector<int>>> blossombestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<std::int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

using i128 = __int128;

std::int64_t checked_i64(i128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError(std::string("matching: ") + what + " exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

// Exact common-denominator scaling of the rational weights to integers.
std::vector<std::int64_t> scale_weights(const std::vector<WeightedEdge>& edges) {
    std::int64_t common = 1;
    for (const WeightedEdge& e : edges) {
        std::int64_t d = e.weight.den();
        std::int64_t g = std::gcd(common, d);
        common = checked_i64(i128(common) * (d / g), "weight denominator lcm");
    }
    std::vector<std::int64_t> w;
    w.reserve(edges.size());
    i128 maxw = 0;
    for (const WeightedEdge& e : edges) {
        i128 scaled = i128(e.weight.num()) * (common / e.weight.den());
        w.push_back(checked_i64(scaled, "scaled weight"));
        maxw = std::max(maxw, scaled);
    }
    // Duals stay within a small multiple of the largest weight; keep a wide
    // safety margin for the internal 2*w and dual sums.
    if (maxw > (i128(1) << 56)) throw OverflowError("matching: scaled weights too large");
    return w;
}

// Weight of a maximum-weight matching on the subgraph of `g` induced by the
// non-blocked vertices, minus any edges in `skip`.
std::int64_t solve_restricted(const WeightedGraph& g, const std::vector<std::int64_t>& w,
                              const std::vector<char>& blocked_vertex) {
    std::vector<BlossomMatcher::Edge> edges;
    std::vector<int> original_index;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const WeightedEdge& e = g.edges[k];
        if (blocked_vertex[e.u] || blocked_vertex[e.v]) continue;
        edges.push_back({e.u, e.v, w[k]});
        original_index.push_back(static_cast<int>(k));
    }
    if (edges.empty()) return 0;
    BlossomMatcher matcher(g.vertex_count, std::move(edges));
    std::int64_t total = 0;
    for (int local : matcher.solve()) total += w[original_index[local]];
    return total;
}

}  // namespace

void validate_graph(const WeightedGraph& g) {
    if (g.vertex_count < 0) throw ValidationError("graph has negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const WeightedEdge& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count) {
            throw ValidationError("edge endpoint out of range");
        }
        if (e.u == e.v) throw ValidationError("self-loop on vertex " + std::to_string(e.u));
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) {
            throw ValidationError("duplicate edge (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
        }
        if (e.weight.is_negative()) throw ValidationError("negative edge weight");
    }
}

Utility Matching::total_weight(const WeightedGraph& g) const {
    Utility total = 0;
    for (int k : edge_indices) total += g.edges[k].weight;
    return total;
}

bool Matching::saturates(const WeightedGraph& g, int vertex) const {
    for (int k : edge_indices) {
        if (g.edges[k].u == vertex || g.edges[k].v == vertex) return true;
    }
    return false;
}

Matching max_weight_matching(const WeightedGraph& g) {
    validate_graph(g);
    std::vector<std::int64_t> w = scale_weights(g.edges);
    std::vector<char> blocked(g.vertex_count, 0);
    std::int64_t best = solve_restricted(g, w, blocked);

    // Canonical selection: admit each edge in index order when forcing it
    // still attains the optimum on the rest of the graph.
    Matching result;
    std::int64_t picked = 0;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const WeightedEdge& e = g.edges[k];
        if (blocked[e.u] || blocked[e.v]) continue;
        blocked[e.u] = blocked[e.v] = 1;
        if (picked + w[k] + solve_restricted(g, w, blocked) == best) {
            picked += w[k];
            result.edge_indices.push_back(static_cast<int>(k));
        } else {
            blocked[e.u] = blocked[e.v] = 0;
        }
    }
    return result;
}

namespace {

void require_size2(const Instance& inst) {
    if (inst.max_coalition_size() > 2) {
        throw ValidationError("instance lists a coalition with more than 2 members; "
                              "the matching algorithms require sizes <= 2");
    }
}

}  // namespace

WeightedGraph match2_graph(const Instance& inst) {
    require_size2(inst);
    const int n = inst.agent_count();
    WeightedGraph g;
    g.vertex_count = 2 * n;
    for (AgentId i = 0; i < n; ++i) {
        g.edges.push_back({i, n + i, inst.singleton_utility(i)});
    }
    for (int idx : inst.size_lex_order()) {
        const Coalition& c = inst.coalition_at(idx);
        if (c.size() != 2) continue;
        g.edges.push_back({c.members()[0], c.members()[1],
                           inst.utility_at(idx) * Utility(2)});
    }
    return g;
}

Partition match2_opt(const Instance& inst) {
    const int n = inst.agent_count();
    WeightedGraph g = match2_graph(inst);
    Matching m = max_weight_matching(g);
    std::vector<char> paired(n, 0);
    std::vector<Coalition> parts;
    for (int k : m.edge_indices) {
        const WeightedEdge& e = g.edges[k];
        if (e.v < n) {  // pair edge
            parts.push_back(Coalition({e.u, e.v}));
            paired[e.u] = paired[e.v] = 1;
        }
    }
    for (AgentId i = 0; i < n; ++i) {
        if (!paired[i]) parts.push_back(Coalition::singleton(i));
    }
    return Partition::from_disjoint_cover(n, std::move(parts));
}

std::vector<PcisLayer> match2_pcis_layers(const Instance& inst) {
    require_size2(inst);
    const int n = inst.agent_count();
    std::vector<int> alive(inst.list_size());
    for (int i = 0; i < inst.list_size(); ++i) alive[i] = i;
    std::vector<char> placed(n, 0);
    int remaining = n;
    std::vector<PcisLayer> layers;
    while (remaining > 0) {
        Utility beta = inst.utility_at(alive.front());
        for (int idx : alive) beta = std::max(beta, inst.utility_at(idx));

        WeightedGraph g;
        g.vertex_count = 2 * n;
        std::vector<int> edge_coalition;
        for (int idx : alive) {
            if (inst.utility_at(idx) != beta) continue;
            const Coalition& c = inst.coalition_at(idx);
            if (c.size() == 1) {
                g.edges.push_back({c.members()[0], n + c.members()[0], Utility(1)});
            } else {
                g.edges.push_back({c.members()[0], c.members()[1], Utility(2)});
            }
            edge_coalition.push_back(idx);
        }
        Matching m = max_weight_matching(g);

        PcisLayer layer;
        layer.beta = beta;
        for (int k : m.edge_indices) {
            const Coalition& c = inst.coalition_at(edge_coalition[k]);
            layer.matching_value += c.size();
            layer.formed.push_back(c);
            for (AgentId a : c.members()) placed[a] = 1;
            remaining -= c.size();
        }
        layers.push_back(std::move(layer));

        std::vector<int> next;
        for (int idx : alive) {
            const Coalition& c = inst.coalition_at(idx);
            bool free = true;
            for (AgentId a : c.members()) {
                if (placed[a]) { free = false; break; }
            }
            if (free) next.push_back(idx);
        }
        alive = std::move(next);
    }
    return layers;
}

Partition match2_pcis(const Instance& inst) {
    std::vector<Coalition> parts;
    for (PcisLayer& layer : match2_pcis_layers(inst)) {
        for (Coalition& c : layer.formed) parts.push_back(std::move(c));
    }
    return Partition::from_disjoint_cover(inst.agent_count(), std::move(parts));
}

}  // namespace hgcrp
