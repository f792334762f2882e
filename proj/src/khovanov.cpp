#include "kh3/khovanov.hpp"

#include <atomic>
#include <chrono>
#include <bit>
#include <cstdlib>
#include <algorithm>
#include <climits>
#include <queue>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace kh3 {

namespace {

// ---------------------------------------------------------------------------
// Per-diagram precomputation: circle structure of every state.
//
// A state is its B-mask (bit k set = B-smoothing at crossing k, crossing 0 the
// least significant bit). The weight |B| fixes the homological degree
// i = |B| - n(D), and j = (3w - c)/2 + |B| + tau with tau = #plus - #minus.
// ---------------------------------------------------------------------------

long long binom(int n, int k) {
    constexpr int N = 64;
    static const auto table = [] {
        auto t = new long long[N][N]();
        for (int i = 0; i < N; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k < 0 || n < 0 || k > n || n >= N) return 0;
    return table[n][k];
}

struct Precomp {
    const LinkDiagram* d = nullptr;
    int c = 0, arcs = 0, nneg = 0, w = 0;
    int const_off = 0;  // (3w - c)/2
    std::vector<uint8_t> ncirc;             // per state
    std::vector<uint8_t> circ;              // state * arcs + arc -> circle id
    std::vector<std::vector<uint32_t>> by_weight;

    const uint8_t* circles_of(uint32_t s) const {
        return circ.data() + static_cast<size_t>(s) * static_cast<size_t>(arcs);
    }
};

Precomp precompute(const LinkDiagram& d, int max_crossings) {
    const int c = d.crossing_count();
    if (c > max_crossings)
        throw std::domain_error("diagram exceeds the crossing guard (" +
                                std::to_string(max_crossings) + " crossings)");
    if (c > 25) throw std::domain_error("state enumeration capped at 25 crossings");
    Precomp p;
    p.d = &d;
    p.c = c;
    p.arcs = d.arc_count();
    p.nneg = d.negative_crossings();
    p.w = d.writhe();
    p.const_off = (3 * p.w - c) / 2;
    const size_t nstates = size_t{1} << c;
    p.ncirc.resize(nstates);
    p.circ.resize(nstates * static_cast<size_t>(p.arcs));
    p.by_weight.assign(static_cast<size_t>(c) + 1, {});
    for (size_t s = 0; s < nstates; ++s) {
        const Smoothing sm = smooth(d, static_cast<uint64_t>(s));
        if (sm.circles > 30) throw std::domain_error("state circle count exceeds mask width");
        p.ncirc[s] = static_cast<uint8_t>(sm.circles);
        uint8_t* row = p.circ.data() + s * static_cast<size_t>(p.arcs);
        for (int a = 0; a < p.arcs; ++a)
            row[a] = static_cast<uint8_t>(sm.arc_circle[static_cast<size_t>(a)]);
        p.by_weight[static_cast<size_t>(std::popcount(static_cast<uint32_t>(s)))].push_back(
            static_cast<uint32_t>(s));
    }
    return p;
}

// basis of C^{i,j} at weight level wt = i + n(D)
struct LevelBasis {
    std::vector<uint32_t> states;   // states admitting this j, ascending
    std::vector<int> minus_count;   // minus-labelled circles per state
    std::vector<long long> offset;  // basis offset per state
    long long dim = 0;
    std::unordered_map<uint32_t, int> pos;  // state -> index into the arrays
};

LevelBasis build_level(const Precomp& p, int wt, int j) {
    LevelBasis lb;
    if (wt < 0 || wt > p.c) return lb;
    const int tau = j - p.const_off - wt;
    for (uint32_t s : p.by_weight[static_cast<size_t>(wt)]) {
        const int nc = p.ncirc[s];
        if (((nc - tau) % 2 + 2) % 2 != 0) continue;
        const int minus = (nc - tau) / 2;
        if (minus < 0 || minus > nc) continue;
        lb.pos.emplace(s, static_cast<int>(lb.states.size()));
        lb.states.push_back(s);
        lb.minus_count.push_back(minus);
        lb.offset.push_back(lb.dim);
        lb.dim += binom(nc, minus);
    }
    return lb;
}

uint32_t first_mask(int popcount) { return popcount == 0 ? 0u : (uint32_t{1} << popcount) - 1; }

// next mask of equal popcount (Gosper); caller bounds the iteration count
uint32_t next_mask(uint32_t v) {
    const uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// rank of a mask among equal-popcount masks in ascending numeric order
long long mask_rank(uint32_t mask) {
    long long r = 0;
    int t = 0;
    while (mask) {
        const int b = std::countr_zero(mask);
        mask &= mask - 1;
        r += binom(b, ++t);
    }
    return r;
}

struct Entry {
    long long row, col;
    int val;
};

// All entries of d^i restricted to quantum degree j; rows index the wt+1
// level basis, columns the wt level basis.
void build_entries(const Precomp& p, int /*wt*/, int /*j*/, const LevelBasis& src,
                   const LevelBasis& dst, std::vector<Entry>& out) {
    out.clear();
    std::vector<int8_t> circmap(64);
    for (size_t si = 0; si < src.states.size(); ++si) {
        const uint32_t s = src.states[si];
        const int nc = p.ncirc[s];
        const int minus = src.minus_count[si];
        const uint8_t* cs = p.circles_of(s);
        for (int k = 0; k < p.c; ++k) {
            if ((s >> k) & 1u) continue;
            const uint32_t t = s | (uint32_t{1} << k);
            const auto it = dst.pos.find(t);
            if (it == dst.pos.end()) continue;
            const size_t ti = static_cast<size_t>(it->second);
            const int sgn = (std::popcount(s >> (k + 1)) & 1) ? -1 : 1;
            const uint8_t* ct = p.circles_of(t);
            const Crossing& x = p.d->crossing(k);
            const int rep_s2 = x.arc[smoothing_is_vertical(x, Label::A) ? kNE : kSW];
            const int rep_t2 = x.arc[smoothing_is_vertical(x, Label::B) ? kNE : kSW];
            const int c1 = cs[x.arc[kNW]];
            const int c2 = cs[rep_s2];
            for (int a = 0; a < p.arcs; ++a)
                circmap[static_cast<size_t>(cs[a])] = static_cast<int8_t>(ct[a]);

            uint32_t m = first_mask(minus);
            const long long count = binom(nc, minus);
            for (long long e = 0; e < count; ++e) {
                const long long col = src.offset[si] + e;
                // transported minus-mask of the untouched circles
                uint32_t base = 0;
                for (uint32_t mm = m; mm;) {
                    const int b = std::countr_zero(mm);
                    mm &= mm - 1;
                    if (b == c1 || b == c2) continue;
                    base |= uint32_t{1} << circmap[static_cast<size_t>(b)];
                }
                if (c1 != c2) {
                    // merge: (++ -> +), (+- -> -), (-+ -> -); (--) has no target
                    const bool m1 = (m >> c1) & 1u, m2 = (m >> c2) & 1u;
                    if (!(m1 && m2)) {
                        uint32_t tm = base;
                        if (m1 || m2) tm |= uint32_t{1} << ct[x.arc[kNW]];
                        out.push_back({dst.offset[ti] + mask_rank(tm), col, sgn});
                    }
                } else {
                    // split: (+ -> +-), (+ -> -+), (- -> --)
                    const int ta = ct[x.arc[kNW]];
                    const int tb = ct[rep_t2];
                    if ((m >> c1) & 1u) {
                        const uint32_t tm = base | (uint32_t{1} << ta) | (uint32_t{1} << tb);
                        out.push_back({dst.offset[ti] + mask_rank(tm), col, sgn});
                    } else {
                        out.push_back({dst.offset[ti] + mask_rank(base | (uint32_t{1} << tb)), col, sgn});
                        out.push_back({dst.offset[ti] + mask_rank(base | (uint32_t{1} << ta)), col, sgn});
                    }
                }
                if (e + 1 < count) m = next_mask(m);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Sparse rank/invariant-factor computation: eliminate +-1 pivots with
// unimodular row/column operations, then hand the small remaining core to the
// dense arbitrary-precision Smith normal form. Differential entries are +-1,
// so in practice nearly everything falls to the unit-pivot pass.
// ---------------------------------------------------------------------------

struct ElimResult {
    long long rank = 0;
    std::vector<BigInt> factors;  // invariant factors > 1
};

struct Overflow {};

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

ElimResult eliminate(long long rows, long long cols, const std::vector<Entry>& entries) {
    const size_t R = static_cast<size_t>(rows), C = static_cast<size_t>(cols);
    // columns as sorted (row, value) vectors; a column update is a two-pointer
    // merge against the pivot column
    using ColVec = std::vector<std::pair<int, long long>>;
    std::vector<ColVec> col(C);
    for (const auto& e : entries)
        col[static_cast<size_t>(e.col)].push_back({static_cast<int>(e.row), e.val});
    for (auto& c : col) {
        std::sort(c.begin(), c.end());
        ColVec packed;
        for (const auto& [r, v] : c) {
            if (!packed.empty() && packed.back().first == r)
                packed.back().second += v;
            else
                packed.push_back({r, v});
        }
        std::erase_if(packed, [](const auto& p) { return p.second == 0; });
        c = std::move(packed);
    }

    std::vector<std::vector<int>> row_cols(R);  // may hold stale column ids
    std::vector<int> row_nnz(R, 0);
    for (size_t c = 0; c < C; ++c)
        for (const auto& [r, v] : col[c]) {
            row_cols[static_cast<size_t>(r)].push_back(static_cast<int>(c));
            ++row_nnz[static_cast<size_t>(r)];
        }

    // lazy Markowitz pivoting: prefer pivots minimizing
    // (col_nnz - 1) * (row_nnz - 1); zero-cost pivots cascade first and keep
    // the fill-in negligible on these complexes
    std::vector<char> col_alive(C, 1), in_heap(C, 0);
    auto unit_score = [&](size_t c, int& best_row, long long& best_val) -> long long {
        best_row = -1;
        best_val = 0;
        long long best = -1;
        for (const auto& [ridx, v] : col[c])
            if (v == 1 || v == -1) {
                const long long score = (static_cast<long long>(col[c].size()) - 1) *
                                        (row_nnz[static_cast<size_t>(ridx)] - 1);
                if (best < 0 || score < best) {
                    best = score;
                    best_row = ridx;
                    best_val = v;
                }
            }
        return best;  // -1 when the column has no unit entry
    };
    using Cand = std::pair<long long, int>;  // (score at push, col)
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
    for (size_t c = 0; c < C; ++c)
        if (!col[c].empty()) {
            int r;
            long long v;
            const long long score = unit_score(c, r, v);
            if (score >= 0) {
                heap.push({score, static_cast<int>(c)});
                in_heap[c] = 1;
            }
        }

    ElimResult res;
    ColVec pivot, scratch;
    std::vector<int> touched;
    while (!heap.empty()) {
        const auto [score_at_push, pc] = heap.top();
        heap.pop();
        const size_t pcs = static_cast<size_t>(pc);
        in_heap[pcs] = 0;
        if (!col_alive[pcs] || col[pcs].empty()) continue;
        int pr;
        long long pval;
        const long long score = unit_score(pcs, pr, pval);
        if (score < 0) continue;  // no unit pivot: leave for the dense core
        if (score > score_at_push && !heap.empty() && heap.top().first < score) {
            heap.push({score, pc});  // stale, worse than the next candidate
            in_heap[pcs] = 1;
            continue;
        }
        const size_t prs = static_cast<size_t>(pr);

        pivot = col[pcs];
        touched.clear();
        touched.swap(row_cols[prs]);
        for (const int cidx : touched) {
            const size_t cs = static_cast<size_t>(cidx);
            if (cidx == pc || !col_alive[cs]) continue;
            ColVec& target = col[cs];
            const auto vit = std::lower_bound(target.begin(), target.end(),
                                              std::pair<int, long long>{pr, LLONG_MIN});
            if (vit == target.end() || vit->first != pr) continue;  // stale
            const long long factor = checked_mul(vit->second, pval);  // value / pivot
            scratch.clear();
            scratch.reserve(target.size() + pivot.size());
            size_t a = 0, b = 0;
            while (a < target.size() || b < pivot.size()) {
                if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
                    scratch.push_back(target[a++]);
                } else if (a == target.size() || pivot[b].first < target[a].first) {
                    const long long nv = checked_mul(-factor, pivot[b].second);
                    if (nv != 0) {
                        scratch.push_back({pivot[b].first, nv});
                        row_cols[static_cast<size_t>(pivot[b].first)].push_back(cidx);
                        ++row_nnz[static_cast<size_t>(pivot[b].first)];
                    }
                    ++b;
                } else {
                    const long long nv =
                        checked_sub(target[a].second, checked_mul(factor, pivot[b].second));
                    if (nv != 0)
                        scratch.push_back({target[a].first, nv});
                    else
                        --row_nnz[static_cast<size_t>(target[a].first)];
                    ++a;
                    ++b;
                }
            }
            target.swap(scratch);
            if (!target.empty() && !in_heap[cs]) {
                int r;
                long long v;
                const long long score = unit_score(cs, r, v);
                if (score >= 0) {
                    heap.push({score, cidx});
                    in_heap[cs] = 1;
                }
            }
        }
        for (const auto& [ridx, v] : pivot)
            if (ridx != pr) --row_nnz[static_cast<size_t>(ridx)];
        col_alive[pcs] = 0;
        col[pcs] = ColVec();
        row_nnz[prs] = 0;
        ++res.rank;
    }

    // dense arbitrary-precision core for whatever has no unit pivot left
    std::unordered_map<int, long long> rmap;
    long long core_cols = 0;
    for (size_t c = 0; c < C; ++c) {
        if (!col_alive[c] || col[c].empty()) continue;
        ++core_cols;
        for (const auto& [ridx, v] : col[c])
            if (!rmap.count(ridx)) rmap.emplace(ridx, static_cast<long long>(rmap.size()));
    }
    if (core_cols > 0) {
        IntegerMatrix core(static_cast<long long>(rmap.size()), core_cols);
        long long cc = 0;
        for (size_t c = 0; c < C; ++c) {
            if (!col_alive[c] || col[c].empty()) continue;
            for (const auto& [ridx, v] : col[c]) core.at(rmap[ridx], cc) = v;
            ++cc;
        }
        const SmithResult snf = smith_normal_form(std::move(core));
        res.rank += snf.rank;
        for (const auto& f : snf.invariant_factors)
            if (f > 1) res.factors.push_back(f);
    }
    return res;
}

int worker_count(const HomologyOptions& opts) {
    if (opts.workers > 0) return opts.workers;
    if (const char* env = std::getenv("KH3_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::pair<int, int> j_range(const Precomp& p) {
    int jmin = 0, jmax = 0;
    bool first = true;
    for (int wt = 0; wt <= p.c; ++wt)
        for (uint32_t s : p.by_weight[static_cast<size_t>(wt)]) {
            const int lo = p.const_off + wt - p.ncirc[s];
            const int hi = p.const_off + wt + p.ncirc[s];
            if (first || lo < jmin) jmin = lo;
            if (first || hi > jmax) jmax = hi;
            first = false;
        }
    return {jmin, jmax};
}

}  // namespace

std::pair<int, int> degrees(const LinkDiagram& d, const EnhancedState& s) {
    if (static_cast<int>(s.state.size()) != d.crossing_count())
        throw std::invalid_argument("state length must equal crossing count");
    const Smoothing sm = smooth(d, s.state);
    if (static_cast<int>(s.circle_signs.size()) != sm.circles)
        throw std::invalid_argument("circle sign count must equal |sD|");
    int sigma = 0;
    for (Label l : s.state) sigma += l == Label::A ? 1 : -1;
    int tau = 0;
    for (int8_t v : s.circle_signs) tau += v > 0 ? 1 : -1;
    const int w = d.writhe();
    if ((w - sigma) % 2 != 0 || (3 * w - sigma + 2 * tau) % 2 != 0)
        throw std::logic_error("degree parity violation");
    return {(w - sigma) / 2, (3 * w - sigma + 2 * tau) / 2};
}

IntegerMatrix differential_matrix(const LinkDiagram& d, int i, int j) {
    const Precomp p = precompute(d, 25);
    const int wt = i + p.nneg;
    const LevelBasis src = build_level(p, wt, j);
    const LevelBasis dst = build_level(p, wt + 1, j);
    IntegerMatrix m(dst.dim, src.dim);
    std::vector<Entry> entries;
    build_entries(p, wt, j, src, dst, entries);
    for (const auto& e : entries) m.at(e.row, e.col) += e.val;
    return m;
}

HomologyTable homology(const LinkDiagram& d, const HomologyOptions& opts) {
    const Precomp p = precompute(d, opts.max_crossings);
    const auto [jmin, jmax] = j_range(p);

    std::vector<int> jvals;
    for (int j = jmin; j <= jmax; j += 2) jvals.push_back(j);

    std::vector<std::vector<std::pair<int, AbelianGroup>>> results(jvals.size());
    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&] {
        std::vector<Entry> entries;
        for (;;) {
            const size_t idx = cursor.fetch_add(1);
            if (idx >= jvals.size()) return;
            const int j = jvals[idx];
            try {
                LevelBasis cur = build_level(p, 0, j);
                long long prev_rank = 0;
                std::vector<BigInt> prev_factors;
                for (int wt = 0; wt <= p.c; ++wt) {
                    LevelBasis next = build_level(p, wt + 1, j);
                    ElimResult er;
                    if (cur.dim > 0 && next.dim > 0) {
                        build_entries(p, wt, j, cur, next, entries);
                        er = eliminate(next.dim, cur.dim, entries);
                    }
                    const long long free_rank = cur.dim - er.rank - prev_rank;
                    if (free_rank < 0) throw std::logic_error("negative free rank");
                    AbelianGroup g;
                    g.free_rank = free_rank;
                    g.torsion = prev_factors;
                    if (!g.trivial()) results[idx].push_back({wt - p.nneg, std::move(g)});
                    prev_rank = er.rank;
                    prev_factors = std::move(er.factors);
                    cur = std::move(next);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int nw = std::min<int>(worker_count(opts), static_cast<int>(jvals.size()) + 1);
    std::vector<std::thread> pool;
    for (int t = 1; t < nw; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    HomologyTable table;
    for (size_t idx = 0; idx < jvals.size(); ++idx)
        for (auto& [i, g] : results[idx]) table.set(i, jvals[idx], std::move(g));
    return table;
}

LaurentPoly graded_euler_characteristic(const HomologyTable& t) {
    LaurentPoly p;
    for (const auto& [cell, g] : t.cells) {
        const auto [i, j] = cell;
        p.add(j, (i % 2 == 0 ? 1 : -1) * g.free_rank);
    }
    return p;
}

LaurentPoly kauffman_bracket_jones(const LinkDiagram& d, const HomologyOptions& opts) {
    const Precomp p = precompute(d, opts.max_crossings);
    LaurentPoly out;
    for (int wt = 0; wt <= p.c; ++wt) {
        const int sign = (wt - p.nneg) % 2 == 0 ? 1 : -1;
        for (uint32_t s : p.by_weight[static_cast<size_t>(wt)]) {
            const int nc = p.ncirc[s];
            const int base = p.const_off + wt;
            for (int r = 0; r <= nc; ++r) out.add(base + nc - 2 * r, sign * binom(nc, r));
        }
    }
    return out;
}

bool differentials_square_to_zero(const LinkDiagram& d, const HomologyOptions& opts) {
    const Precomp p = precompute(d, opts.max_crossings);
    const auto [jmin, jmax] = j_range(p);
    std::vector<Entry> e1, e2;
    for (int j = jmin; j <= jmax; j += 2) {
        LevelBasis a = build_level(p, 0, j);
        LevelBasis b = build_level(p, 1, j);
        for (int wt = 0; wt + 1 <= p.c; ++wt) {
            LevelBasis c = build_level(p, wt + 2, j);
            build_entries(p, wt, j, a, b, e1);
            build_entries(p, wt + 1, j, b, c, e2);
            std::unordered_map<long long, std::vector<std::pair<long long, int>>> by_src_row;
            for (const auto& e : e2) by_src_row[e.col].push_back({e.row, e.val});
            std::unordered_map<long long, long long> acc;  // packed (row, col)
            const long long stride = a.dim + 1;
            for (const auto& e : e1) {
                auto it = by_src_row.find(e.row);
                if (it == by_src_row.end()) continue;
                for (auto [r2, v2] : it->second)
                    acc[r2 * stride + e.col] += static_cast<long long>(v2) * e.val;
            }
            for (const auto& [key, v] : acc)
                if (v != 0) return false;
            a = std::move(b);
            b = std::move(c);
        }
    }
    return true;
}

}  // namespace kh3
