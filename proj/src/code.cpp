#include "conorbit/code.hpp"

#include <algorithm>
#include <thread>

namespace conorbit {

namespace {

// digit value d in [0, q) as a field element of the designated subfield:
// 0 -> ZERO, d -> xi0^(d-1)
FieldElem digit_elem(const FieldCtx& ctx, int64_t d) {
    if (d == 0) return kZero;
    return ctx.pow(ctx.subfield_generator(), d - 1);
}

std::vector<Codeword> echelonize(const FieldCtx& ctx, std::vector<Codeword> rows,
                                 std::vector<int>& pivots) {
    const size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<Codeword> basis;
    pivots.clear();
    for (auto& row : rows) {
        Codeword v = row;
        for (size_t b = 0; b < basis.size(); ++b) {
            int pc = pivots[b];
            if (!v[static_cast<size_t>(pc)].is_zero()) {
                FieldElem f = v[static_cast<size_t>(pc)];
                for (size_t j = 0; j < n; ++j)
                    v[j] = ctx.sub(v[j], ctx.mul(f, basis[b][j]));
            }
        }
        int pc = -1;
        for (size_t j = 0; j < n; ++j)
            if (!v[j].is_zero()) {
                pc = static_cast<int>(j);
                break;
            }
        if (pc < 0) continue;
        FieldElem invp = ctx.inv(v[static_cast<size_t>(pc)]);
        for (size_t j = 0; j < n; ++j) v[j] = ctx.mul(v[j], invp);
        basis.push_back(std::move(v));
        pivots.push_back(pc);
    }
    return basis;
}

} // namespace

int hamming_weight(const Codeword& w) {
    int c = 0;
    for (FieldElem x : w)
        if (!x.is_zero()) ++c;
    return c;
}

Code build_code(const FieldCtx& ctx, const RootSystem& roots, const CosetTable& table,
                const CodeSpec& spec) {
    require(!spec.selected.empty(), errc::empty_selection, "coset selection is empty");
    for (int t : spec.selected)
        require(t >= 0 && t < static_cast<int>(table.cosets.size()), errc::invalid_parameter,
                "coset index out of range");

    const int64_t n = roots.n;
    // g(x) = prod over unselected cosets of prod_{j in coset} (x - zeta^j)
    std::vector<FieldElem> g{ctx.one()};
    for (int t = 0; t < static_cast<int>(table.cosets.size()); ++t) {
        if (std::binary_search(spec.selected.begin(), spec.selected.end(), t)) continue;
        for (int64_t j : table.cosets[static_cast<size_t>(t)].elements) {
            FieldElem root = ctx.pow(roots.zeta, j);
            FieldElem neg_root = ctx.neg(root);
            std::vector<FieldElem> next(g.size() + 1, kZero);
            for (size_t i = 0; i < g.size(); ++i) {
                next[i + 1] = ctx.add(next[i + 1], g[i]);
                next[i] = ctx.add(next[i], ctx.mul(g[i], neg_root));
            }
            g = std::move(next);
        }
    }
    for (FieldElem c : g)
        require(ctx.in_subfield(c, roots.q), errc::subfield_violation,
                "generator polynomial coefficient outside F_q");

    Code code;
    code.spec = spec;
    code.genpoly = g;
    code.dim = n - static_cast<int64_t>(g.size() - 1);

    int64_t ksum = 0;
    for (int t : spec.selected) ksum += table.cosets[static_cast<size_t>(t)].size;
    require(code.dim == ksum, errc::subfield_violation,
            "degree of g(x) inconsistent with selected coset sizes");

    for (int64_t i = 0; i < code.dim; ++i) {
        Codeword row(static_cast<size_t>(n), kZero);
        for (size_t d = 0; d < g.size(); ++d) row[static_cast<size_t>(i) + d] = g[d];
        code.genmatrix.push_back(std::move(row));
    }
    code.echelon = echelonize(ctx, code.genmatrix, code.pivots);
    return code;
}

Codeword primitive_idempotent(const FieldCtx& ctx, const RootSystem& roots,
                              const CosetTable& table, int t) {
    require(t >= 0 && t < static_cast<int>(table.cosets.size()), errc::invalid_parameter,
            "coset index out of range");
    const int64_t n = roots.n;
    require(n % ctx.p() != 0, errc::char_divides_n, "characteristic divides n");
    // 1/n in the field: n reduced into the prime field, then inverted
    FieldElem n_elem = kZero;
    for (int64_t i = 0; i < n % ctx.p(); ++i) n_elem = ctx.add(n_elem, ctx.one());
    FieldElem inv_n = ctx.inv(n_elem);

    Codeword eps(static_cast<size_t>(n), kZero);
    for (int64_t l = 0; l < n; ++l) {
        FieldElem s = kZero;
        for (int64_t j : table.cosets[static_cast<size_t>(t)].elements)
            s = ctx.add(s, ctx.pow(roots.zeta, -j * l));
        eps[static_cast<size_t>(l)] = ctx.mul(inv_n, s);
        require(ctx.in_subfield(eps[static_cast<size_t>(l)], roots.q), errc::subfield_violation,
                "idempotent coefficient outside F_q");
    }
    return eps;
}

Codeword ring_mul(const FieldCtx& ctx, const RootSystem& roots, const Codeword& a,
                  const Codeword& b) {
    const int64_t n = roots.n;
    Codeword out(static_cast<size_t>(n), kZero);
    for (int64_t i = 0; i < n; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int64_t j = 0; j < n; ++j) {
            if (b[static_cast<size_t>(j)].is_zero()) continue;
            FieldElem prod = ctx.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]);
            int64_t d = i + j;
            if (d >= n) {
                d -= n; // x^n = lambda
                prod = ctx.mul(prod, roots.lambda);
            }
            out[static_cast<size_t>(d)] = ctx.add(out[static_cast<size_t>(d)], prod);
        }
    }
    return out;
}

namespace {

struct EnumContext {
    const FieldCtx* ctx;
    int64_t n = 0;
    int64_t k = 0;
    int64_t q = 0;
    // scaled[d*q + digit] = digit * genmatrix row d, as int32 logs
    std::vector<std::vector<int32_t>> scaled;
};

EnumContext prepare_enum(const FieldCtx& ctx, const Code& code) {
    EnumContext ec;
    ec.ctx = &ctx;
    ec.n = code.spec.n;
    ec.k = code.dim;
    ec.q = code.spec.q;
    ec.scaled.resize(static_cast<size_t>(ec.k * ec.q));
    for (int64_t d = 0; d < ec.k; ++d) {
        for (int64_t dig = 0; dig < ec.q; ++dig) {
            FieldElem f = digit_elem(ctx, dig);
            std::vector<int32_t> row(static_cast<size_t>(ec.n), -1);
            for (int64_t j = 0; j < ec.n; ++j)
                row[static_cast<size_t>(j)] =
                    static_cast<int32_t>(ctx.mul(f, code.genmatrix[static_cast<size_t>(d)][static_cast<size_t>(j)]).log);
            ec.scaled[static_cast<size_t>(d * ec.q + dig)] = std::move(row);
        }
    }
    return ec;
}

// walk messages with leading digit in [first, last), invoking sink at each leaf
template <typename Sink>
void walk(const EnumContext& ec, int64_t first, int64_t last, Sink&& sink) {
    const FieldCtx& ctx = *ec.ctx;
    const int64_t n = ec.n, k = ec.k, q = ec.q;
    // partial[d] = sum of scaled rows for digits 0..d-1
    std::vector<std::vector<int32_t>> partial(static_cast<size_t>(k) + 1,
                                              std::vector<int32_t>(static_cast<size_t>(n), -1));
    std::vector<int64_t> digit(static_cast<size_t>(k), 0);
    auto advance = [&](int64_t depth) {
        const auto& prev = partial[static_cast<size_t>(depth)];
        const auto& row = ec.scaled[static_cast<size_t>(depth * q + digit[static_cast<size_t>(depth)])];
        auto& out = partial[static_cast<size_t>(depth) + 1];
        for (int64_t j = 0; j < n; ++j)
            out[static_cast<size_t>(j)] =
                static_cast<int32_t>(ctx.add(FieldElem{prev[static_cast<size_t>(j)]},
                                             FieldElem{row[static_cast<size_t>(j)]}).log);
    };
    digit[0] = first;
    int64_t depth = 0;
    while (true) {
        if (depth == k - 1 || k == 1) {
            // innermost digit: iterate directly
            for (int64_t dig = digit[static_cast<size_t>(depth)]; dig < (depth == 0 ? last : q); ++dig) {
                digit[static_cast<size_t>(depth)] = dig;
                advance(depth);
                sink(partial[static_cast<size_t>(k)]);
            }
        } else {
            advance(depth);
            ++depth;
            digit[static_cast<size_t>(depth)] = 0;
            continue;
        }
        // backtrack
        while (true) {
            if (depth == 0) return;
            --depth;
            ++digit[static_cast<size_t>(depth)];
            int64_t limit = depth == 0 ? last : q;
            if (digit[static_cast<size_t>(depth)] < limit) break;
        }
    }
}

int64_t pow_checked(int64_t q, int64_t k, int64_t cap) {
    int64_t total = 1;
    for (int64_t i = 0; i < k; ++i) {
        require(total <= cap / q, errc::cap_exceeded, "q^k exceeds enumeration cap");
        total *= q;
    }
    return total;
}

} // namespace

WeightDist enumerate_weights(const FieldCtx& ctx, const Code& code, int64_t cap, int threads) {
    const int64_t n = code.spec.n, q = code.spec.q, k = code.dim;
    pow_checked(q, k, cap);
    EnumContext ec = prepare_enum(ctx, code);

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads > q) threads = static_cast<int>(q);
    // the message space splits on the leading digit; chunk counts merge additively
    std::vector<std::vector<int64_t>> partial_counts(static_cast<size_t>(threads),
                                                     std::vector<int64_t>(static_cast<size_t>(n) + 1, 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        int64_t first = q * w / threads;
        int64_t last = q * (w + 1) / threads;
        pool.emplace_back([&, w, first, last]() {
            auto& counts = partial_counts[static_cast<size_t>(w)];
            walk(ec, first, last, [&](const std::vector<int32_t>& word) {
                int wgt = 0;
                for (int32_t c : word) wgt += c >= 0;
                ++counts[static_cast<size_t>(wgt)];
            });
        });
    }
    for (auto& th : pool) th.join();

    WeightDist dist;
    dist.counts.assign(static_cast<size_t>(n) + 1, 0);
    for (const auto& pc : partial_counts)
        for (size_t i = 0; i <= static_cast<size_t>(n); ++i) dist.counts[i] += pc[i];
    for (size_t i = 1; i <= static_cast<size_t>(n); ++i)
        if (dist.counts[i] > 0) ++dist.ell;
    dist.enumerator = enumerator_string(dist.counts);
    return dist;
}

CodewordList materialize_codewords(const FieldCtx& ctx, const Code& code, int64_t cap) {
    const int64_t n = code.spec.n, q = code.spec.q, k = code.dim;
    int64_t total = pow_checked(q, k, cap);
    EnumContext ec = prepare_enum(ctx, code);
    CodewordList list;
    list.n = n;
    list.count = total;
    list.logs.resize(static_cast<size_t>(total * n));
    int64_t idx = 0;
    walk(ec, 0, q, [&](const std::vector<int32_t>& word) {
        std::copy(word.begin(), word.end(), list.logs.begin() + idx * n);
        ++idx;
    });
    return list;
}

bool contains(const FieldCtx& ctx, const Code& code, const Codeword& w) {
    Codeword v = w;
    const size_t n = v.size();
    for (size_t b = 0; b < code.echelon.size(); ++b) {
        int pc = code.pivots[b];
        if (!v[static_cast<size_t>(pc)].is_zero()) {
            FieldElem f = v[static_cast<size_t>(pc)];
            for (size_t j = 0; j < n; ++j)
                v[j] = ctx.sub(v[j], ctx.mul(f, code.echelon[b][j]));
        }
    }
    for (FieldElem x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string enumerator_string(const std::vector<int64_t>& counts) {
    std::string s;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(counts[i]);
        } else {
            if (counts[i] != 1) s += std::to_string(counts[i]);
            s += "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace conorbit
