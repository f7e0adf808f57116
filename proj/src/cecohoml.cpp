#include "curcoh/cecohoml.hpp"

#include "curcoh/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace curcoh {

using exactmat::SparseRatMatrix;

namespace {

using Index = std::uint16_t;

// All basis vectors of one degree inside one block.
struct DegreeBasis {
    int k = 0;
    std::vector<Index> tuples; // k entries per element
    std::vector<std::uint32_t> module;
    std::unordered_map<std::string, std::uint32_t> lookup;

    std::size_t size() const { return module.size(); }
    const Index* tuple(std::size_t e) const { return tuples.data() + e * static_cast<std::size_t>(k); }

    static std::string encode(const Index* t, int k, std::uint32_t v) {
        std::string s(static_cast<std::size_t>(k) * sizeof(Index) + sizeof(v), '\0');
        std::memcpy(s.data(), t, static_cast<std::size_t>(k) * sizeof(Index));
        std::memcpy(s.data() + static_cast<std::size_t>(k) * sizeof(Index), &v, sizeof(v));
        return s;
    }

    void push(const Index* t, std::uint32_t v) {
        lookup.emplace(encode(t, k, v), static_cast<std::uint32_t>(size()));
        tuples.insert(tuples.end(), t, t + k);
        module.push_back(v);
    }

    std::optional<std::uint32_t> find(const Index* t, std::uint32_t v) const {
        auto it = lookup.find(encode(t, k, v));
        if (it == lookup.end())
            return std::nullopt;
        return it->second;
    }
};

struct Context {
    const LieTable& L;
    const ModuleRep& M;
    ComplexKind kind;
    bool graded;
    // column access for chains: act_cols[x][v] = entries (w, c) of ρ(x) e_v
    std::vector<std::vector<std::vector<std::pair<std::uint32_t, Rational>>>> act_cols;
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> empty_rows;
};

Context make_context(const LieTable& L, const ModuleRep& M, ComplexKind kind) {
    if (M.host_name != L.name() || M.host_dim != L.dim() || M.action.size() != L.dim())
        throw ValidationError("module is not a module over " + L.name());
    if (!M.weights.empty() && M.weights.front().arity() != L.weight_arity())
        throw ValidationError("module weight arity does not match the algebra");
    if (L.dim() > 0xFFFF)
        throw ValidationError("algebra too large");
    Context c{L, M, kind, L.graded() && !M.positive_degree_acts(L), {}, {}};
    c.act_cols.resize(L.dim());
    for (std::size_t x = 0; x < L.dim(); ++x) {
        auto& cols = c.act_cols[x];
        cols.resize(M.dim);
        for (std::size_t w = 0; w < M.dim; ++w)
            for (const auto& [v, coeff] : M.action[x].row(w))
                cols[v].emplace_back(static_cast<std::uint32_t>(w), coeff);
    }
    return c;
}

BlockKey key_of(const Context& c, const Index* t, int k, std::uint32_t v) {
    MultiWeight w = c.M.weights[v];
    if (c.kind == ComplexKind::Cochains) {
        for (int i = 0; i < k; ++i)
            w = w + (-c.L.weight(t[i]));
    } else {
        for (int i = 0; i < k; ++i)
            w = w + c.L.weight(t[i]);
    }
    std::optional<int> deg;
    if (c.graded) {
        int d = 0;
        for (int i = 0; i < k; ++i)
            d += c.L.t_degree(t[i]);
        deg = d;
    }
    return BlockKey{std::move(w), deg};
}

// Inserts c into the sorted tuple `rest`; returns the sign, 0 if c is present.
int insert_sorted(std::vector<Index>& rest, Index c) {
    auto it = std::lower_bound(rest.begin(), rest.end(), c);
    if (it != rest.end() && *it == c)
        return 0;
    const auto pos = it - rest.begin();
    rest.insert(it, c);
    return pos % 2 ? -1 : 1;
}

// Row of the differential from degree k to k−1 for basis element e.
SparseRatMatrix::Row differential_row(const Context& c, const DegreeBasis& src, std::size_t e,
                                      const DegreeBasis& dst) {
    SparseRatMatrix::Row row;
    const int k = src.k;
    const Index* t = src.tuple(e);
    const std::uint32_t v = src.module[e];
    auto emit = [&](const std::vector<Index>& tup, std::uint32_t w, const Rational& coeff) {
        auto idx = dst.find(tup.data(), w);
        if (!idx)
            throw InvariantViolation("differential leaves its weight block");
        auto [it, inserted] = row.try_emplace(*idx, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                row.erase(it);
        }
    };
    std::vector<Index> rest;
    rest.reserve(static_cast<std::size_t>(k));
    // module terms
    for (int a = 0; a < k; ++a) {
        rest.assign(t, t + k);
        rest.erase(rest.begin() + a);
        const int sign = a % 2 ? -1 : 1;
        if (c.kind == ComplexKind::Chains) {
            // (−1)^{a+1} (x̂_a) ⊗ x_a·v, a counted from 1
            for (const auto& [w, coeff] : c.act_cols[t[a]][v])
                emit(rest, w, -sign * coeff);
        } else {
            // (−1)^a x_a·φ(x̂_a), component v of the value
            for (const auto& [w, coeff] : c.M.action[t[a]].row(v))
                emit(rest, static_cast<std::uint32_t>(w), sign * coeff);
        }
    }
    // bracket terms: (−1)^{a+b} [x_a,x_b] ∧ (rest)
    std::vector<Index> tup;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const SparseVec& br = c.L.bracket(t[a], t[b]);
            if (br.empty())
                continue;
            const int sign = (a + b) % 2 ? -1 : 1;
            rest.clear();
            for (int i = 0; i < k; ++i)
                if (i != a && i != b)
                    rest.push_back(t[i]);
            for (const auto& term : br) {
                tup = rest;
                const int s = insert_sorted(tup, static_cast<Index>(term.index));
                if (s == 0)
                    continue;
                emit(tup, v, sign * s * term.coeff);
            }
        }
    return row;
}

struct Blocks {
    std::vector<BlockKey> keys;
    // per block, per degree offset (degree = d_lo + i)
    std::vector<std::vector<DegreeBasis>> bases;
    int d_lo = 0;
    int d_hi = 0;
};

Blocks enumerate(const Context& c, int d_lo, int d_hi) {
    Blocks out;
    out.d_lo = d_lo;
    out.d_hi = d_hi;
    std::map<BlockKey, std::size_t> where;
    const int n = static_cast<int>(c.L.dim());
    for (int k = d_lo; k <= d_hi; ++k) {
        if (k > n)
            break;
        std::vector<Index> t(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            t[static_cast<std::size_t>(i)] = static_cast<Index>(i);
        for (;;) {
            for (std::uint32_t v = 0; v < c.M.dim; ++v) {
                BlockKey key = key_of(c, t.data(), k, v);
                auto it = where.find(key);
                if (it == where.end()) {
                    it = where.emplace(key, out.keys.size()).first;
                    out.keys.push_back(key);
                    out.bases.emplace_back();
                    for (int d = d_lo; d <= d_hi; ++d) {
                        out.bases.back().emplace_back();
                        out.bases.back().back().k = d;
                    }
                }
                out.bases[it->second][static_cast<std::size_t>(k - d_lo)].push(t.data(), v);
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++t[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                t[static_cast<std::size_t>(j)] = static_cast<Index>(t[static_cast<std::size_t>(j - 1)] + 1);
        }
    }
    return out;
}

SparseRatMatrix block_matrix(const Context& c, const DegreeBasis& src, const DegreeBasis& dst) {
    SparseRatMatrix m(0, dst.size());
    for (std::size_t e = 0; e < src.size(); ++e)
        m.append_row(differential_row(c, src, e, dst));
    return m;
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace

std::int64_t BlockComplex::homology(const BlockData& b, int n) const {
    if (n < n_lo || n > n_hi)
        throw ValidationError("degree outside the assembled range");
    const auto i = static_cast<std::size_t>(n);
    const std::size_t rn = n >= 1 ? b.ranks[i] : 0;
    return static_cast<std::int64_t>(b.dims[i]) - static_cast<std::int64_t>(rn) -
           static_cast<std::int64_t>(b.ranks[i + 1]);
}

std::size_t BlockComplex::total_dim(int n) const {
    std::size_t s = 0;
    for (const auto& [k, b] : blocks)
        s += b.dims[static_cast<std::size_t>(n)];
    return s;
}

std::size_t BlockComplex::max_block_dim(int n) const {
    std::size_t s = 0;
    for (const auto& [k, b] : blocks)
        s = std::max(s, b.dims[static_cast<std::size_t>(n)]);
    return s;
}

namespace {
std::atomic<std::uint64_t> g_dd_blocks{0};
} // namespace

std::uint64_t dd_blocks_verified() { return g_dd_blocks.load(); }

BlockComplex build_block_complex(const LieTable& L, const ModuleRep& M, int n_lo, int n_hi, ComplexKind kind,
                                 const EngineOptions& opts) {
    if (n_lo < 0 || n_hi < n_lo)
        throw ValidationError("invalid degree range");
    const Context c = make_context(L, M, kind);
    const int d_lo = std::max(0, n_lo - 1);
    const int d_hi = n_hi + 1;
    const Blocks blocks = enumerate(c, d_lo, d_hi);

    BlockComplex out;
    out.kind = kind;
    out.n_lo = n_lo;
    out.n_hi = n_hi;
    out.graded = c.graded;
    out.arity = L.weight_arity();
    out.dd_checked = opts.check_dd;

    std::vector<BlockData> results(blocks.keys.size());
    parallel_for(blocks.keys.size(), opts.threads, [&](std::size_t bi) {
        const auto& bases = blocks.bases[bi];
        BlockData data;
        data.dims.assign(static_cast<std::size_t>(d_hi) + 1, 0);
        data.ranks.assign(static_cast<std::size_t>(d_hi) + 2, 0);
        for (int d = d_lo; d <= d_hi; ++d)
            data.dims[static_cast<std::size_t>(d)] = bases[static_cast<std::size_t>(d - d_lo)].size();
        SparseRatMatrix prev;
        bool have_prev = false;
        for (int k = std::max(1, n_lo); k <= d_hi; ++k) {
            const auto& src = bases[static_cast<std::size_t>(k - d_lo)];
            const auto& dst = bases[static_cast<std::size_t>(k - 1 - d_lo)];
            if (src.size() == 0 || dst.size() == 0) {
                have_prev = false;
                continue;
            }
            SparseRatMatrix m = block_matrix(c, src, dst);
            data.ranks[static_cast<std::size_t>(k)] = exactmat::rank(m);
            if (opts.check_dd && have_prev && prev.rows() > 0) {
                if (!(m * prev).is_zero())
                    throw InvariantViolation("d∘d ≠ 0 in block " + blocks.keys[bi].weight.str() + " of " +
                                             L.name());
            }
            prev = std::move(m);
            have_prev = true;
        }
        if (opts.check_dd)
            g_dd_blocks.fetch_add(1, std::memory_order_relaxed);
        results[bi] = std::move(data);
    });
    for (std::size_t bi = 0; bi < blocks.keys.size(); ++bi)
        out.blocks.emplace(blocks.keys[bi], std::move(results[bi]));
    return out;
}

namespace {

SparseRatMatrix full_differential(const LieTable& L, const ModuleRep& M, int n, ComplexKind kind) {
    Context c = make_context(L, M, kind);
    c.graded = false;
    const int dim = static_cast<int>(L.dim());
    auto all = [&](int k) {
        DegreeBasis b;
        b.k = k;
        if (k < 0 || k > dim)
            return b;
        std::vector<Index> t(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            t[static_cast<std::size_t>(i)] = static_cast<Index>(i);
        for (;;) {
            for (std::uint32_t v = 0; v < M.dim; ++v)
                b.push(t.data(), v);
            int i = k - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == dim - k + i)
                --i;
            if (i < 0)
                break;
            ++t[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                t[static_cast<std::size_t>(j)] = static_cast<Index>(t[static_cast<std::size_t>(j - 1)] + 1);
        }
        return b;
    };
    const DegreeBasis src = all(n), dst = all(n - 1);
    if (n < 1)
        return SparseRatMatrix(src.size(), 0);
    return block_matrix(c, src, dst);
}

} // namespace

GradedCharacter character_of(const BlockComplex& bc, int n) {
    GradedCharacter chi;
    chi.arity = bc.arity;
    for (const auto& [key, data] : bc.blocks) {
        const std::int64_t h = bc.homology(data, n);
        if (h < 0)
            throw InvariantViolation("negative homology dimension");
        if (h == 0)
            continue;
        auto& cm = chi.by_degree[key.t_degree];
        cm.arity = bc.arity;
        cm.add(key.weight, h);
    }
    return chi;
}

SparseRatMatrix ce_differential(const LieTable& L, const ModuleRep& M, int n) {
    if (n < 0 || n > static_cast<int>(L.dim()))
        throw ValidationError("degree out of range");
    return full_differential(L, M, n, ComplexKind::Chains);
}

SparseRatMatrix ce_codifferential(const LieTable& L, const ModuleRep& M, int n) {
    if (n < 0 || n >= static_cast<int>(L.dim()))
        throw ValidationError("degree out of range");
    return full_differential(L, M, n + 1, ComplexKind::Cochains);
}

GradedCharacter homology_character(const LieTable& L, const ModuleRep& M, int n, const EngineOptions& opts) {
    return character_of(build_block_complex(L, M, n, n, ComplexKind::Chains, opts), n);
}

GradedCharacter cohomology_character(const LieTable& L, const ModuleRep& M, int n, const EngineOptions& opts) {
    return character_of(build_block_complex(L, M, n, n, ComplexKind::Cochains, opts), n);
}

DecompositionReport decompose_character(const RootSystem& rs, const GradedCharacter& chi) {
    DecompositionReport out;
    out.arity = chi.arity;
    for (const auto& [deg, cm] : chi.by_degree) {
        const DecompositionReport part = decompose_character(rs, cm);
        for (const auto& f : part.factors)
            out.factors.push_back(Factor{f.highest, f.mult, deg});
    }
    out.normalize();
    return out;
}

namespace {
void check_arity(const LieTable& L, int arity) {
    if (arity != L.weight_arity())
        throw ValidationError("requested arity " + std::to_string(arity) + " but " + L.name() + " carries arity " +
                              std::to_string(L.weight_arity()) + " weights");
}
} // namespace

DecompositionReport decompose_homology(const LieTable& L, const ModuleRep& M, int n, int arity,
                                       const EngineOptions& opts) {
    check_arity(L, arity);
    return decompose_character(L.root_system(), homology_character(L, M, n, opts));
}

DecompositionReport decompose_cohomology(const LieTable& L, const ModuleRep& M, int n, int arity,
                                         const EngineOptions& opts) {
    check_arity(L, arity);
    return decompose_character(L.root_system(), cohomology_character(L, M, n, opts));
}

CheckReport euler_check(const LieTable& L, const ModuleRep& M, int n_max, const EngineOptions& opts) {
    const BlockComplex bc = build_block_complex(L, M, 0, n_max, ComplexKind::Chains, opts);
    CheckReport rep;
    for (const auto& [key, data] : bc.blocks) {
        ++rep.blocks_checked;
        std::int64_t chains = 0, homology = 0;
        for (int n = 0; n <= n_max; ++n) {
            const std::int64_t sign = n % 2 ? -1 : 1;
            chains += sign * static_cast<std::int64_t>(data.dims[static_cast<std::size_t>(n)]);
            homology += sign * bc.homology(data, n);
        }
        const std::int64_t boundary = (n_max % 2 ? -1 : 1) *
                                      static_cast<std::int64_t>(data.ranks[static_cast<std::size_t>(n_max) + 1]);
        if (chains != homology + boundary && rep.pass) {
            rep.pass = false;
            rep.first_violation = "block " + key.weight.str() + ": chains " + std::to_string(chains) +
                                  " vs homology " + std::to_string(homology + boundary);
        }
    }
    return rep;
}

CheckReport duality_check(const LieTable& L, int n, const EngineOptions& opts) {
    const ModuleRep triv = trivial_module(L);
    const BlockComplex chains = build_block_complex(L, triv, n, n, ComplexKind::Chains, opts);
    const BlockComplex cochains = build_block_complex(L, triv, n, n, ComplexKind::Cochains, opts);
    CheckReport rep;
    std::map<BlockKey, std::int64_t> h, hc;
    for (const auto& [key, data] : chains.blocks)
        if (auto d = chains.homology(data, n))
            h[BlockKey{-key.weight, key.t_degree}] = d;
    for (const auto& [key, data] : cochains.blocks)
        if (auto d = cochains.homology(data, n))
            hc[key] = d;
    rep.blocks_checked = chains.blocks.size();
    if (h != hc) {
        rep.pass = false;
        for (const auto& [k, d] : hc)
            if (h[k] != d) {
                rep.first_violation = "weight " + k.weight.str() + ": H^n " + std::to_string(d) + " vs H_n " +
                                      std::to_string(h[k]);
                break;
            }
        if (rep.first_violation.empty())
            rep.first_violation = "homology has blocks absent from cohomology";
    }
    return rep;
}

CheckReport dd_check(const LieTable& L, const ModuleRep& M, int n_max, const EngineOptions& opts) {
    CheckReport rep;
    EngineOptions o = opts;
    o.check_dd = true;
    try {
        for (auto kind : {ComplexKind::Chains, ComplexKind::Cochains})
            rep.blocks_checked += build_block_complex(L, M, 0, n_max, kind, o).blocks.size();
    } catch (const InvariantViolation& e) {
        rep.pass = false;
        rep.first_violation = e.what();
    }
    return rep;
}

DecompositionReport remove_slot_coadjoints(const RootSystem& rs, const DecompositionReport& r) {
    DecompositionReport out = r;
    const Weight coadj = dual_weight(rs, rs.theta());
    for (int slot = 0; slot < r.arity; ++slot) {
        MultiWeight w = MultiWeight::zero(r.arity, rs.rank());
        w.parts[static_cast<std::size_t>(slot)] = coadj;
        for (auto& f : out.factors)
            if (f.highest == w && f.mult > 0) {
                f.mult -= 1;
                break;
            }
    }
    out.normalize();
    return out;
}

StabilityVerdict stabilization_gtp(const RootSystem& rs, int n, int s, const EngineOptions& opts) {
    StabilityVerdict v;
    v.s = s;
    const LieTable a = build_gtp_s(rs, s), b = build_gtp_s(rs, s + 1);
    v.at_s = decompose_cohomology(a, trivial_module(a), n, 1, opts);
    v.at_next = decompose_cohomology(b, trivial_module(b), n, 1, opts);
    auto below = [&](const DecompositionReport& r) {
        DecompositionReport o;
        for (const auto& f : r.factors)
            if (f.t_degree && *f.t_degree < s)
                o.factors.push_back(f);
        return o;
    };
    v.stable = below(v.at_s) == below(v.at_next);
    v.note = "heuristic: factors of t-degree < " + std::to_string(s) + " compared at s=" + std::to_string(s) +
             " and s=" + std::to_string(s + 1) + "; agreement does not certify s beyond the unknown bound";
    return v;
}

StabilityVerdict stabilization_gIs(const RootSystem& rs, const std::vector<Rational>& points, int n, int s,
                                   const EngineOptions& opts) {
    StabilityVerdict v;
    v.s = s;
    const auto a = build_gIs(rs, points, s).first;
    const auto b = build_gIs(rs, points, s + 1).first;
    const int k = static_cast<int>(points.size());
    v.at_s = decompose_cohomology(a, trivial_module(a), n, k, opts);
    v.at_next = decompose_cohomology(b, trivial_module(b), n, k, opts);
    v.stable = remove_slot_coadjoints(rs, v.at_s) == remove_slot_coadjoints(rs, v.at_next);
    v.note = "heuristic: reports at s=" + std::to_string(s) + " and s=" + std::to_string(s + 1) +
             " compared after removing the truncation coadjoints";
    return v;
}

} // namespace curcoh
