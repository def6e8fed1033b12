#include "conorbit/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace conorbit {

std::string group_name(GroupKind kind, int l0) {
    switch (kind) {
        case GroupKind::rho_sigma: return "rho_sigma";
        case GroupKind::mu_rho_sigma: return "mu_rho_sigma";
        case GroupKind::neg_mu_rho_sigma: return "neg_mu_rho_sigma";
        case GroupKind::frob_rho_sigma: return "frob_rho_sigma_l" + std::to_string(l0);
    }
    return "?";
}

namespace {

void require_unit_multiplier(int64_t a, const CosetTable& table, const std::string& who) {
    require(std::gcd(a, table.rn) == 1 && ((a - 1) % table.r + table.r) % table.r == 0,
            errc::not_in_unit_subgroup, who + " not in Z*_rn intersected with 1 + r*Z_rn");
}

bool in_q_span(int64_t x, const CosetTable& table) {
    int64_t y = 1 % table.rn;
    for (int64_t i = 0; i < table.m; ++i) {
        if (y == x) return true;
        y = y * table.q % table.rn;
    }
    return false;
}

} // namespace

std::vector<int64_t> group_multipliers(const GroupSpec& spec, const CosetTable& table) {
    const int64_t rn = table.rn, q = table.q, m = table.m;
    std::vector<int64_t> mults;
    switch (spec.kind) {
        case GroupKind::rho_sigma:
            mults.push_back(1 % rn);
            break;
        case GroupKind::mu_rho_sigma: {
            int64_t x = 1 % rn;
            for (int64_t i = 0; i < m; ++i) {
                mults.push_back(x);
                x = x * q % rn;
            }
            break;
        }
        case GroupKind::neg_mu_rho_sigma: {
            int64_t neg = (rn - 1) % rn;
            require_unit_multiplier(neg, table, "mu_{-1}");
            require(!in_q_span(neg, table), errc::precondition_failed,
                    "-1 lies in <q> mod rn; the (r0, r1) exponent box would not be faithful");
            for (int64_t s : {int64_t(1), neg}) {
                int64_t x = s;
                for (int64_t i = 0; i < m; ++i) {
                    mults.push_back(x);
                    x = x * q % rn;
                }
            }
            break;
        }
        case GroupKind::frob_rho_sigma: {
            require(spec.e > 0 && spec.e % 2 == 0, errc::precondition_failed,
                    "frob group needs q = p^e with even e");
            int64_t b = mod_pow(spec.p, spec.e / 2, rn);
            if (spec.l0 % 2 == 1) b = (rn - b) % rn;
            require_unit_multiplier(b, table, "mu_{(-1)^l0 p^{e/2}}");
            require(ord_mod(b, rn) == 2 * m, errc::precondition_failed,
                    "ord_rn((-1)^l0 p^{e/2}) != 2m; exponent range [0, 2m) would not be faithful");
            int64_t x = 1 % rn;
            for (int64_t i = 0; i < 2 * m; ++i) {
                mults.push_back(x);
                x = x * b % rn;
            }
            break;
        }
    }
    return mults;
}

int64_t group_order(const GroupSpec& spec, const CosetTable& table) {
    return static_cast<int64_t>(group_multipliers(spec, table).size()) * table.n * (table.q - 1);
}

Codeword act_rho(const FieldCtx& ctx, const RootSystem& roots, const Codeword& w) {
    const int64_t n = roots.n;
    Codeword out(static_cast<size_t>(n), kZero);
    out[0] = ctx.mul(roots.lambda, w[static_cast<size_t>(n - 1)]);
    for (int64_t i = 0; i + 1 < n; ++i) out[static_cast<size_t>(i + 1)] = w[static_cast<size_t>(i)];
    return out;
}

Codeword act_sigma(const FieldCtx& ctx, const RootSystem& roots, const Codeword& w, int64_t j) {
    FieldElem s = ctx.pow(roots.xi, j);
    Codeword out(w.size(), kZero);
    for (size_t i = 0; i < w.size(); ++i) out[i] = ctx.mul(s, w[i]);
    return out;
}

Codeword act_mu(const FieldCtx& ctx, const RootSystem& roots, const Codeword& w, int64_t a) {
    const int64_t n = roots.n, rn = roots.r * n;
    a = ((a % rn) + rn) % rn;
    require(std::gcd(a, rn) == 1 && (a - 1) % roots.r == 0, errc::not_in_unit_subgroup,
            "multiplier constant not in Z*_rn intersected with 1 + r*Z_rn");
    Codeword out(static_cast<size_t>(n), kZero);
    for (int64_t i = 0; i < n; ++i) {
        int64_t ai = a * i;
        // x^{ai} = lambda^{floor(ai/n)} x^{ai mod n}
        out[static_cast<size_t>(ai % n)] =
            ctx.mul(w[static_cast<size_t>(i)], ctx.pow(roots.lambda, ai / n));
    }
    return out;
}

CompiledMap compile_action(const FieldCtx& ctx, const RootSystem& roots, int64_t a,
                           int64_t r2, int64_t r3) {
    const int64_t n = roots.n;
    CompiledMap map;
    map.group_mod = ctx.order_of_group();
    map.pi.resize(static_cast<size_t>(n));
    map.scal.resize(static_cast<size_t>(n));
    FieldElem xi_r3 = ctx.pow(roots.xi, r3);
    for (int64_t i = 0; i < n; ++i) {
        FieldElem s = xi_r3;
        int64_t j = i + r2;
        if (j >= n) {
            j -= n;
            s = ctx.mul(s, roots.lambda);
        }
        int64_t aj = a * j;
        s = ctx.mul(s, ctx.pow(roots.lambda, aj / n));
        map.pi[static_cast<size_t>(i)] = static_cast<int32_t>(aj % n);
        map.scal[static_cast<size_t>(i)] = static_cast<int32_t>(s.log);
    }
    return map;
}

int64_t count_fixed(const CodewordList& words, const CompiledMap& map) {
    const int64_t n = words.n;
    const int64_t mod = map.group_mod;
    int64_t fixed = 0;
    const int32_t* base = words.logs.data();
    for (int64_t idx = 0; idx < words.count; ++idx) {
        const int32_t* w = base + idx * n;
        bool nonzero = false;
        bool ok = true;
        for (int64_t i = 0; i < n; ++i) {
            int32_t src = w[i];
            int32_t dst = w[map.pi[static_cast<size_t>(i)]];
            if (src < 0) {
                if (dst >= 0) { ok = false; break; }
                continue;
            }
            nonzero = true;
            if (dst < 0) { ok = false; break; }
            int64_t expect = src + map.scal[static_cast<size_t>(i)];
            if (expect >= mod) expect -= mod; // scalars are reduced, one subtract suffices
            if (expect != dst) { ok = false; break; }
        }
        if (ok && nonzero) ++fixed;
    }
    return fixed;
}

namespace {

// apply compiled map to one flat word
void apply_map(const CompiledMap& map, const int32_t* in, int32_t* out, int64_t n) {
    for (int64_t i = 0; i < n; ++i) {
        int32_t s = in[i];
        if (s < 0) {
            out[map.pi[static_cast<size_t>(i)]] = -1;
        } else {
            int64_t v = s + map.scal[static_cast<size_t>(i)];
            if (v >= map.group_mod) v -= map.group_mod;
            out[map.pi[static_cast<size_t>(i)]] = static_cast<int32_t>(v);
        }
    }
}

std::string word_key(const int32_t* w, int64_t n) {
    return std::string(reinterpret_cast<const char*>(w), static_cast<size_t>(n) * sizeof(int32_t));
}

} // namespace

OrbitReport orbit_count_direct(const FieldCtx& ctx, const RootSystem& roots,
                               const CosetTable& table, const CodewordList& words,
                               const GroupSpec& spec) {
    const int64_t n = words.n;
    auto mults = group_multipliers(spec, table);

    // generator maps: rho, sigma, and one mu per generating multiplier
    std::vector<CompiledMap> gens;
    gens.push_back(compile_action(ctx, roots, 1, 1 % roots.n, 0));
    if (roots.q > 2) gens.push_back(compile_action(ctx, roots, 1, 0, 1));
    std::vector<int64_t> gen_mults;
    switch (spec.kind) {
        case GroupKind::rho_sigma: break;
        case GroupKind::mu_rho_sigma: gen_mults.push_back(table.q % table.rn); break;
        case GroupKind::neg_mu_rho_sigma:
            gen_mults.push_back(table.q % table.rn);
            gen_mults.push_back((table.rn - 1) % table.rn);
            break;
        case GroupKind::frob_rho_sigma: gen_mults.push_back(mults.size() > 1 ? mults[1] : 1 % table.rn); break;
    }
    for (int64_t a : gen_mults) gens.push_back(compile_action(ctx, roots, a, 0, 0));

    std::unordered_map<std::string, int64_t> index;
    index.reserve(static_cast<size_t>(words.count) * 2);
    for (int64_t i = 0; i < words.count; ++i)
        index.emplace(word_key(words.logs.data() + i * n, n), i);

    // seeds in lexicographic codeword order (canonical orbit numbering)
    std::vector<int64_t> order(static_cast<size_t>(words.count));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int64_t a, int64_t b) {
        const int32_t* wa = words.logs.data() + a * n;
        const int32_t* wb = words.logs.data() + b * n;
        return std::lexicographical_compare(wa, wa + n, wb, wb + n);
    });

    auto weight_of = [&](int64_t idx) {
        const int32_t* w = words.logs.data() + idx * n;
        int c = 0;
        for (int64_t i = 0; i < n; ++i) c += w[i] >= 0;
        return c;
    };

    std::vector<char> visited(static_cast<size_t>(words.count), 0);
    std::vector<int32_t> scratch(static_cast<size_t>(n));

    OrbitReport report;
    report.group = group_name(spec.kind, spec.l0);
    report.order = static_cast<int64_t>(mults.size()) * table.n * (table.q - 1);
    report.weight_homogeneous = true;

    std::map<int, int64_t> orbits_per_weight;
    int64_t orbit_count = 0;
    std::vector<int64_t> frontier, next;
    for (int64_t seed : order) {
        if (visited[static_cast<size_t>(seed)]) continue;
        int orbit_weight = weight_of(seed);
        if (orbit_weight == 0) { visited[static_cast<size_t>(seed)] = 1; continue; }
        ++orbit_count;
        ++orbits_per_weight[orbit_weight];
        visited[static_cast<size_t>(seed)] = 1;
        frontier.assign(1, seed);
        while (!frontier.empty()) {
            next.clear();
            for (int64_t cur : frontier) {
                const int32_t* w = words.logs.data() + cur * n;
                for (const CompiledMap& g : gens) {
                    apply_map(g, w, scratch.data(), n);
                    auto it = index.find(word_key(scratch.data(), n));
                    require(it != index.end(), errc::precondition_failed,
                            "group generator left the code (not an automorphism?)");
                    int64_t img = it->second;
                    if (!visited[static_cast<size_t>(img)]) {
                        visited[static_cast<size_t>(img)] = 1;
                        if (weight_of(img) != orbit_weight) report.weight_homogeneous = false;
                        next.push_back(img);
                    }
                }
            }
            frontier.swap(next);
        }
    }
    report.orbit_count_direct = orbit_count;
    for (auto [w, c] : orbits_per_weight) report.weight_classes.push_back({w, c});
    report.single_orbit_per_weight =
        std::all_of(report.weight_classes.begin(), report.weight_classes.end(),
                    [](const WeightClass& wc) { return wc.orbit_count_within == 1; });
    return report;
}

int64_t orbit_count_burnside(const FieldCtx& ctx, const RootSystem& roots,
                             const CosetTable& table, const CodewordList& words,
                             const GroupSpec& spec, int threads) {
    auto mults = group_multipliers(spec, table);
    const int64_t q = table.q, n = table.n;
    const int64_t elems = static_cast<int64_t>(mults.size()) * n * (q - 1);

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    std::vector<cpp_int> partial(static_cast<size_t>(threads), 0);
    std::vector<std::thread> pool;
    for (int wkr = 0; wkr < threads; ++wkr) {
        int64_t first = elems * wkr / threads;
        int64_t last = elems * (wkr + 1) / threads;
        pool.emplace_back([&, wkr, first, last]() {
            cpp_int sum = 0;
            for (int64_t e = first; e < last; ++e) {
                int64_t r3 = e % (q - 1);
                int64_t rest = e / (q - 1);
                int64_t r2 = rest % n;
                int64_t r1 = rest / n;
                CompiledMap map = compile_action(ctx, roots, mults[static_cast<size_t>(r1)], r2, r3);
                sum += count_fixed(words, map);
            }
            partial[static_cast<size_t>(wkr)] = sum;
        });
    }
    for (auto& th : pool) th.join();
    cpp_int total = 0;
    for (const cpp_int& s : partial) total += s;
    require(total % elems == 0, errc::non_integral_average,
            "Burnside average is not an integer (group enumeration bug)");
    cpp_int orbits = total / elems;
    return static_cast<int64_t>(orbits);
}

bool unique_factorization_check(const FieldCtx& ctx, const RootSystem& roots,
                                const CosetTable& table, const GroupSpec& spec) {
    auto mults = group_multipliers(spec, table);
    const int64_t q = table.q, n = table.n;

    // probe vectors: the compiled (pi, scal) pair IS the map's action on the
    // standard basis; two fixed pseudo-random vectors ride along as a guard
    std::mt19937 rng(12345);
    std::vector<Codeword> probes(2, Codeword(static_cast<size_t>(n), kZero));
    for (auto& v : probes)
        for (int64_t i = 0; i < n; ++i) {
            int64_t d = static_cast<int64_t>(rng() % static_cast<uint32_t>(q));
            v[static_cast<size_t>(i)] =
                d == 0 ? kZero : ctx.pow(ctx.subfield_generator(), d - 1);
        }

    std::unordered_set<std::string> seen;
    int64_t tuples = 0;
    for (int64_t a : mults) {
        for (int64_t r2 = 0; r2 < n; ++r2) {
            for (int64_t r3 = 0; r3 < q - 1; ++r3) {
                ++tuples;
                CompiledMap map = compile_action(ctx, roots, a, r2, r3);
                std::string key;
                key.reserve(static_cast<size_t>(n) * 8);
                for (int64_t i = 0; i < n; ++i) {
                    key += std::to_string(map.pi[static_cast<size_t>(i)]);
                    key += ',';
                    key += std::to_string(map.scal[static_cast<size_t>(i)]);
                    key += ';';
                }
                for (const auto& v : probes) {
                    std::vector<int32_t> in(static_cast<size_t>(n)), out(static_cast<size_t>(n));
                    for (int64_t i = 0; i < n; ++i) in[static_cast<size_t>(i)] = static_cast<int32_t>(v[static_cast<size_t>(i)].log);
                    apply_map(map, in.data(), out.data(), n);
                    for (int64_t i = 0; i < n; ++i) {
                        key += std::to_string(out[static_cast<size_t>(i)]);
                        key += ',';
                    }
                    key += '|';
                }
                seen.insert(std::move(key));
            }
        }
    }
    return static_cast<int64_t>(seen.size()) == tuples;
}

} // namespace conorbit
