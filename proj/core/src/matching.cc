// Copyright 2026 The hamsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamsurf/matching.h"

#include <algorithm>
#include <string>

#include "hamsurf/errors.h"

namespace hamsurf {

namespace {

// Primal-dual blossom algorithm in the formulation of Galil (1986), with the
// bookkeeping layout of van Rantwijk's reference implementation. Vertices are
// 0..n-1, non-trivial blossoms n..2n-1. Edge k has endpoints 2k and 2k+1;
// endpoint p belongs to vertex endpoint[p], and p ^ 1 is the other end.
//
// Labels: 0 free, 1 S (outer), 2 T (inner); bit 4 marks blossoms during scan.
// Weights are doubled internally so every dual stays integral.
class BlossomMatcher {
   public:
    BlossomMatcher(size_t n, std::span<const WeightedEdge> edges, bool max_cardinality)
        : n_(static_cast<long>(n)), max_cardinality_(max_cardinality) {
        edges_.reserve(edges.size());
        int64_t max_weight = 0;
        for (const auto &e : edges) {
            if (e.u >= n || e.v >= n) {
                throw IndexError("max_weight_matching: edge endpoint out of range");
            }
            if (e.u == e.v) {
                continue;
            }
            edges_.push_back({static_cast<long>(e.u), static_cast<long>(e.v), 2 * e.weight});
            max_weight = std::max(max_weight, 2 * e.weight);
        }
        long m = static_cast<long>(edges_.size());
        endpoint_.resize(static_cast<size_t>(2 * m));
        for (long p = 0; p < 2 * m; p++) {
            const auto &e = edges_[static_cast<size_t>(p / 2)];
            endpoint_[static_cast<size_t>(p)] = (p % 2 == 0) ? e.i : e.j;
        }
        neighbend_.resize(n);
        for (long k = 0; k < m; k++) {
            const auto &e = edges_[static_cast<size_t>(k)];
            neighbend_[static_cast<size_t>(e.i)].push_back(2 * k + 1);
            neighbend_[static_cast<size_t>(e.j)].push_back(2 * k);
        }
        size_t n2 = 2 * n;
        mate_.assign(n, -1);
        label_.assign(n2, 0);
        labelend_.assign(n2, -1);
        inblossom_.resize(n);
        for (size_t v = 0; v < n; v++) {
            inblossom_[v] = static_cast<long>(v);
        }
        blossomparent_.assign(n2, -1);
        blossomchilds_.assign(n2, {});
        blossombase_.assign(n2, -1);
        for (size_t v = 0; v < n; v++) {
            blossombase_[v] = static_cast<long>(v);
        }
        blossomendps_.assign(n2, {});
        bestedge_.assign(n2, -1);
        blossombestedges_.assign(n2, {});
        has_bestedges_.assign(n2, false);
        for (long b = 2 * n_ - 1; b >= n_; b--) {
            unusedblossoms_.push_back(b);
        }
        std::reverse(unusedblossoms_.begin(), unusedblossoms_.end());
        dualvar_.assign(n2, 0);
        for (size_t v = 0; v < n; v++) {
            dualvar_[v] = max_weight;
        }
        allowedge_.assign(static_cast<size_t>(m), false);
    }

    std::vector<long> run() {
        for (long stage = 0; stage < n_; stage++) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (long b = n_; b < 2 * n_; b++) {
                blossombestedges_[static_cast<size_t>(b)].clear();
                has_bestedges_[static_cast<size_t>(b)] = false;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();

            for (long v = 0; v < n_; v++) {
                if (mate_[v] == -1 && label_[at(inblossom_, v)] == 0) {
                    assign_label(v, 1, -1);
                }
            }

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    long v = queue_.back();
                    queue_.pop_back();
                    for (long p : neighbend_[static_cast<size_t>(v)]) {
                        long k = p / 2;
                        long w = endpoint_[static_cast<size_t>(p)];
                        if (inblossom_[static_cast<size_t>(v)] == inblossom_[static_cast<size_t>(w)]) {
                            continue;
                        }
                        int64_t kslack = 0;
                        if (!allowedge_[static_cast<size_t>(k)]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge_[static_cast<size_t>(k)] = true;
                            }
                        }
                        long bw = inblossom_[static_cast<size_t>(w)];
                        if (allowedge_[static_cast<size_t>(k)]) {
                            if (label_[static_cast<size_t>(bw)] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[static_cast<size_t>(bw)] == 1) {
                                long base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[static_cast<size_t>(w)] == 0) {
                                label_[static_cast<size_t>(w)] = 2;
                                labelend_[static_cast<size_t>(w)] = p ^ 1;
                            }
                        } else if (label_[static_cast<size_t>(bw)] == 1) {
                            long b = inblossom_[static_cast<size_t>(v)];
                            if (bestedge_[static_cast<size_t>(b)] == -1 ||
                                kslack < slack(bestedge_[static_cast<size_t>(b)])) {
                                bestedge_[static_cast<size_t>(b)] = k;
                            }
                        } else if (label_[static_cast<size_t>(w)] == 0) {
                            if (bestedge_[static_cast<size_t>(w)] == -1 ||
                                kslack < slack(bestedge_[static_cast<size_t>(w)])) {
                                bestedge_[static_cast<size_t>(w)] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }

                int deltatype = -1;
                int64_t delta = 0;
                long deltaedge = -1;
                long deltablossom = -1;

                if (!max_cardinality_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                }
                for (long v = 0; v < n_; v++) {
                    if (label_[at(inblossom_, v)] == 0 && bestedge_[static_cast<size_t>(v)] != -1) {
                        int64_t d = slack(bestedge_[static_cast<size_t>(v)]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[static_cast<size_t>(v)];
                        }
                    }
                }
                for (long b = 0; b < 2 * n_; b++) {
                    size_t bi = static_cast<size_t>(b);
                    if (blossomparent_[bi] == -1 && label_[bi] == 1 && bestedge_[bi] != -1) {
                        int64_t kslack = slack(bestedge_[bi]);
                        if (kslack % 2 != 0) {
                            throw AlgorithmError("max_weight_matching: odd slack on S-S edge");
                        }
                        int64_t d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[bi];
                        }
                    }
                }
                for (long b = n_; b < 2 * n_; b++) {
                    size_t bi = static_cast<size_t>(b);
                    if (blossombase_[bi] >= 0 && blossomparent_[bi] == -1 && label_[bi] == 2 &&
                        (deltatype == -1 || dualvar_[bi] < delta)) {
                        delta = dualvar_[bi];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // No further progress possible; only reachable in max-cardinality mode.
                    deltatype = 1;
                    delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
                }

                for (long v = 0; v < n_; v++) {
                    int lab = label_[at(inblossom_, v)];
                    if (lab == 1) {
                        dualvar_[static_cast<size_t>(v)] -= delta;
                    } else if (lab == 2) {
                        dualvar_[static_cast<size_t>(v)] += delta;
                    }
                }
                for (long b = n_; b < 2 * n_; b++) {
                    size_t bi = static_cast<size_t>(b);
                    if (blossombase_[bi] >= 0 && blossomparent_[bi] == -1) {
                        if (label_[bi] == 1) {
                            dualvar_[bi] += delta;
                        } else if (label_[bi] == 2) {
                            dualvar_[bi] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[static_cast<size_t>(deltaedge)] = true;
                    long i = edges_[static_cast<size_t>(deltaedge)].i;
                    long j = edges_[static_cast<size_t>(deltaedge)].j;
                    if (label_[at(inblossom_, i)] == 0) {
                        std::swap(i, j);
                    }
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[static_cast<size_t>(deltaedge)] = true;
                    queue_.push_back(edges_[static_cast<size_t>(deltaedge)].i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }

            if (!augmented) {
                break;
            }
            for (long b = n_; b < 2 * n_; b++) {
                size_t bi = static_cast<size_t>(b);
                if (blossomparent_[bi] == -1 && blossombase_[bi] >= 0 && label_[bi] == 1 && dualvar_[bi] == 0) {
                    expand_blossom(b, true);
                }
            }
        }

        std::vector<long> result(static_cast<size_t>(n_), -1);
        for (long v = 0; v < n_; v++) {
            if (mate_[static_cast<size_t>(v)] >= 0) {
                result[static_cast<size_t>(v)] = endpoint_[static_cast<size_t>(mate_[static_cast<size_t>(v)])];
            }
        }
        return result;
    }

   private:
    struct Edge {
        long i;
        long j;
        int64_t w;
    };

    static size_t at(const std::vector<long> &vec, long index) {
        return static_cast<size_t>(vec[static_cast<size_t>(index)]);
    }

    int64_t slack(long k) const {
        const auto &e = edges_[static_cast<size_t>(k)];
        return dualvar_[static_cast<size_t>(e.i)] + dualvar_[static_cast<size_t>(e.j)] - 2 * e.w;
    }

    void blossom_leaves(long b, std::vector<long> &out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (long t : blossomchilds_[static_cast<size_t>(b)]) {
            blossom_leaves(t, out);
        }
    }

    std::vector<long> leaves(long b) const {
        std::vector<long> out;
        blossom_leaves(b, out);
        return out;
    }

    void assign_label(long w, int t, long p) {
        long b = inblossom_[static_cast<size_t>(w)];
        label_[static_cast<size_t>(w)] = label_[static_cast<size_t>(b)] = t;
        labelend_[static_cast<size_t>(w)] = labelend_[static_cast<size_t>(b)] = p;
        bestedge_[static_cast<size_t>(w)] = bestedge_[static_cast<size_t>(b)] = -1;
        if (t == 1) {
            blossom_leaves(b, queue_);
        } else if (t == 2) {
            long base = blossombase_[static_cast<size_t>(b)];
            long mb = mate_[static_cast<size_t>(base)];
            assign_label(endpoint_[static_cast<size_t>(mb)], 1, mb ^ 1);
        }
    }

    // Walks back from v and w to find a common ancestor (new blossom base),
    // or returns -1 when the paths reach two distinct roots (augmenting path).
    long scan_blossom(long v, long w) {
        std::vector<long> path;
        long base = -1;
        while (v != -1 || w != -1) {
            long b = inblossom_[static_cast<size_t>(v)];
            if (label_[static_cast<size_t>(b)] & 4) {
                base = blossombase_[static_cast<size_t>(b)];
                break;
            }
            path.push_back(b);
            label_[static_cast<size_t>(b)] = 5;
            if (labelend_[static_cast<size_t>(b)] == -1) {
                v = -1;
            } else {
                v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(b)])];
                b = inblossom_[static_cast<size_t>(v)];
                v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(b)])];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (long b : path) {
            label_[static_cast<size_t>(b)] = 1;
        }
        return base;
    }

    void add_blossom(long base, long k) {
        long v = edges_[static_cast<size_t>(k)].i;
        long w = edges_[static_cast<size_t>(k)].j;
        long bb = inblossom_[static_cast<size_t>(base)];
        long bv = inblossom_[static_cast<size_t>(v)];
        long bw = inblossom_[static_cast<size_t>(w)];
        long b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        size_t bi = static_cast<size_t>(b);
        blossombase_[bi] = base;
        blossomparent_[bi] = -1;
        blossomparent_[static_cast<size_t>(bb)] = b;

        std::vector<long> path;
        std::vector<long> endps;
        while (bv != bb) {
            blossomparent_[static_cast<size_t>(bv)] = b;
            path.push_back(bv);
            endps.push_back(labelend_[static_cast<size_t>(bv)]);
            v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bv)])];
            bv = inblossom_[static_cast<size_t>(v)];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[static_cast<size_t>(bw)] = b;
            path.push_back(bw);
            endps.push_back(labelend_[static_cast<size_t>(bw)] ^ 1);
            w = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bw)])];
            bw = inblossom_[static_cast<size_t>(w)];
        }
        blossomchilds_[bi] = path;
        blossomendps_[bi] = endps;

        label_[bi] = 1;
        labelend_[bi] = labelend_[static_cast<size_t>(bb)];
        dualvar_[bi] = 0;
        for (long leaf : leaves(b)) {
            if (label_[at(inblossom_, leaf)] == 2) {
                queue_.push_back(leaf);
            }
            inblossom_[static_cast<size_t>(leaf)] = b;
        }

        std::vector<long> bestedgeto(static_cast<size_t>(2 * n_), -1);
        for (long child : path) {
            size_t ci = static_cast<size_t>(child);
            std::vector<std::vector<long>> nblists;
            if (!has_bestedges_[ci]) {
                for (long leaf : leaves(child)) {
                    std::vector<long> list;
                    for (long p : neighbend_[static_cast<size_t>(leaf)]) {
                        list.push_back(p / 2);
                    }
                    nblists.push_back(std::move(list));
                }
            } else {
                nblists.push_back(blossombestedges_[ci]);
            }
            for (const auto &nblist : nblists) {
                for (long kk : nblist) {
                    long i = edges_[static_cast<size_t>(kk)].i;
                    long j = edges_[static_cast<size_t>(kk)].j;
                    if (inblossom_[static_cast<size_t>(j)] == b) {
                        std::swap(i, j);
                    }
                    long bj = inblossom_[static_cast<size_t>(j)];
                    size_t bji = static_cast<size_t>(bj);
                    if (bj != b && label_[bji] == 1 &&
                        (bestedgeto[bji] == -1 || slack(kk) < slack(bestedgeto[bji]))) {
                        bestedgeto[bji] = kk;
                    }
                }
            }
            blossombestedges_[ci].clear();
            has_bestedges_[ci] = false;
            bestedge_[ci] = -1;
        }
        blossombestedges_[bi].clear();
        for (long kk : bestedgeto) {
            if (kk != -1) {
                blossombestedges_[bi].push_back(kk);
            }
        }
        has_bestedges_[bi] = true;
        bestedge_[bi] = -1;
        for (long kk : blossombestedges_[bi]) {
            if (bestedge_[bi] == -1 || slack(kk) < slack(bestedge_[bi])) {
                bestedge_[bi] = kk;
            }
        }
    }

    void expand_blossom(long b, bool endstage) {
        size_t bi = static_cast<size_t>(b);
        std::vector<long> childs = blossomchilds_[bi];
        for (long s : childs) {
            size_t si = static_cast<size_t>(s);
            blossomparent_[si] = -1;
            if (s < n_) {
                inblossom_[si] = s;
            } else if (endstage && dualvar_[si] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (long leaf : leaves(s)) {
                    inblossom_[static_cast<size_t>(leaf)] = s;
                }
            }
        }

        if (!endstage && label_[bi] == 2) {
            // Relabel the children along the even-length path from the entry
            // child back to the base; the rest become free or T as needed.
            long len = static_cast<long>(childs.size());
            const auto &endps = blossomendps_[bi];
            auto child_at = [&](long j) { return childs[static_cast<size_t>((j % len + len) % len)]; };
            auto endp_at = [&](long j) { return endps[static_cast<size_t>((j % len + len) % len)]; };

            long entrychild = inblossom_[static_cast<size_t>(endpoint_[static_cast<size_t>(labelend_[bi] ^ 1)])];
            long j = static_cast<long>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            long jstep;
            long endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            long p = labelend_[bi];
            while (j != 0) {
                label_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = 0;
                label_[static_cast<size_t>(endpoint_[static_cast<size_t>(endp_at(j - endptrick) ^ endptrick ^ 1)])] = 0;
                assign_label(endpoint_[static_cast<size_t>(p ^ 1)], 2, p);
                allowedge_[static_cast<size_t>(endp_at(j - endptrick) / 2)] = true;
                j += jstep;
                p = endp_at(j - endptrick) ^ endptrick;
                allowedge_[static_cast<size_t>(p / 2)] = true;
                j += jstep;
            }
            long bv = child_at(j);
            label_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = label_[static_cast<size_t>(bv)] = 2;
            labelend_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = labelend_[static_cast<size_t>(bv)] = p;
            bestedge_[static_cast<size_t>(bv)] = -1;
            j += jstep;
            while (child_at(j) != entrychild) {
                bv = child_at(j);
                if (label_[static_cast<size_t>(bv)] == 1) {
                    j += jstep;
                    continue;
                }
                long labelled = -1;
                for (long leaf : leaves(bv)) {
                    if (label_[static_cast<size_t>(leaf)] != 0) {
                        labelled = leaf;
                        break;
                    }
                }
                if (labelled >= 0) {
                    label_[static_cast<size_t>(labelled)] = 0;
                    long mb = mate_[static_cast<size_t>(blossombase_[static_cast<size_t>(bv)])];
                    label_[static_cast<size_t>(endpoint_[static_cast<size_t>(mb)])] = 0;
                    assign_label(labelled, 2, labelend_[static_cast<size_t>(labelled)]);
                }
                j += jstep;
            }
        }

        label_[bi] = -1;
        labelend_[bi] = -1;
        blossomchilds_[bi].clear();
        blossomendps_[bi].clear();
        blossombase_[bi] = -1;
        blossombestedges_[bi].clear();
        has_bestedges_[bi] = false;
        bestedge_[bi] = -1;
        unusedblossoms_.push_back(b);
    }

    // Swaps matched/unmatched edges along the even path inside blossom b from
    // vertex v to the base, then rotates the child list so v's child is first.
    void augment_blossom(long b, long v) {
        size_t bi = static_cast<size_t>(b);
        long t = v;
        while (blossomparent_[static_cast<size_t>(t)] != b) {
            t = blossomparent_[static_cast<size_t>(t)];
        }
        if (t >= n_) {
            augment_blossom(t, v);
        }
        auto &childs = blossomchilds_[bi];
        auto &endps = blossomendps_[bi];
        long len = static_cast<long>(childs.size());
        auto wrap = [&](long j) { return static_cast<size_t>((j % len + len) % len); };

        long i = static_cast<long>(std::find(childs.begin(), childs.end(), t) - childs.begin());
        long j = i;
        long jstep;
        long endptrick;
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
            t = childs[wrap(j)];
            long p = endps[wrap(j - endptrick)] ^ endptrick;
            if (t >= n_) {
                augment_blossom(t, endpoint_[static_cast<size_t>(p)]);
            }
            j += jstep;
            t = childs[wrap(j)];
            if (t >= n_) {
                augment_blossom(t, endpoint_[static_cast<size_t>(p ^ 1)]);
            }
            mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p)])] = p ^ 1;
            mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[bi] = blossombase_[static_cast<size_t>(childs[0])];
    }

    void augment_matching(long k) {
        long v = edges_[static_cast<size_t>(k)].i;
        long w = edges_[static_cast<size_t>(k)].j;
        for (auto [s, p] : {std::pair<long, long>{v, 2 * k + 1}, std::pair<long, long>{w, 2 * k}}) {
            while (true) {
                long bs = inblossom_[static_cast<size_t>(s)];
                if (bs >= n_) {
                    augment_blossom(bs, s);
                }
                mate_[static_cast<size_t>(s)] = p;
                if (labelend_[static_cast<size_t>(bs)] == -1) {
                    break;
                }
                long t = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bs)])];
                long bt = inblossom_[static_cast<size_t>(t)];
                s = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bt)])];
                long jj = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bt)] ^ 1)];
                if (bt >= n_) {
                    augment_blossom(bt, jj);
                }
                mate_[static_cast<size_t>(jj)] = labelend_[static_cast<size_t>(bt)];
                p = labelend_[static_cast<size_t>(bt)] ^ 1;
            }
        }
    }

    long n_;
    bool max_cardinality_;
    std::vector<Edge> edges_;
    std::vector<long> endpoint_;
    std::vector<std::vector<long>> neighbend_;
    std::vector<long> mate_;
    std::vector<int> label_;
    std::vector<long> labelend_;
    std::vector<long> inblossom_;
    std::vector<long> blossomparent_;
    std::vector<std::vector<long>> blossomchilds_;
    std::vector<long> blossombase_;
    std::vector<std::vector<long>> blossomendps_;
    std::vector<long> bestedge_;
    std::vector<std::vector<long>> blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<long> unusedblossoms_;
    std::vector<int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<long> queue_;
};

}  // namespace

std::vector<long> max_weight_matching(size_t num_vertices, std::span<const WeightedEdge> edges,
                                      bool max_cardinality) {
    if (num_vertices == 0) {
        return {};
    }
    return BlossomMatcher(num_vertices, edges, max_cardinality).run();
}

std::vector<long> min_weight_perfect_matching(size_t num_vertices, std::span<const WeightedEdge> edges) {
    if (num_vertices == 0) {
        return {};
    }
    if (num_vertices % 2 != 0) {
        throw AlgorithmError("min_weight_perfect_matching: odd vertex count " + std::to_string(num_vertices));
    }
    int64_t top = 0;
    for (const auto &e : edges) {
        top = std::max(top, e.weight);
    }
    // Every perfect matching has the same cardinality, so maximizing
    // sum(top + 1 - w) over maximum matchings minimizes sum(w).
    std::vector<WeightedEdge> flipped(edges.begin(), edges.end());
    for (auto &e : flipped) {
        e.weight = top + 1 - e.weight;
    }
    std::vector<long> mate = max_weight_matching(num_vertices, flipped, true);
    for (long m : mate) {
        if (m < 0) {
            throw AlgorithmError("min_weight_perfect_matching: graph has no perfect matching");
        }
    }
    return mate;
}

}  // namespace hamsurf
