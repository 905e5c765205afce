#include <numeric>

#include "hopfact/classify.hpp"

namespace hopfact {

namespace {

// witness for (b, a) from one for (a, b)
IsoVerdict reversed(const IsoVerdict& v, const InnerActionMap& a) {
    IsoVerdict r = v;
    if (!v.witness) return r;
    const IsoWitness& w = *v.witness;
    IsoWitness inv{inverse(w.c), {}, {}};
    for (const auto& l : w.lambda) inv.lambda.push_back(l.inv());
    for (size_t i = 0; i < w.mu.size(); ++i) {
        CycNum la(1);
        const GrpElt& ai = a.pres.datum.a[i];
        for (size_t l = 0; l < w.lambda.size(); ++l) la *= w.lambda[l].pow(ai[l]);
        inv.mu.push_back(-w.mu[i] * la);
    }
    r.witness = std::move(inv);
    return r;
}

size_t find_root(std::vector<size_t>& parent, size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

ClassReport enumerate_and_dedupe(std::vector<CatalogEntry> entries) {
    ClassReport rep;
    const size_t n = entries.size();
    rep.verdicts.assign(n, std::vector<IsoVerdict>(n));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

    const long np = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < np; ++k) {
        const auto [i, j] = pairs[static_cast<size_t>(k)];
        rep.verdicts[i][j] = iso_test(entries[i].action, entries[j].action);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) rep.verdicts[j][i] = reversed(rep.verdicts[i][j], entries[i].action);

    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rep.verdicts[i][j].isomorphic) {
                const size_t ri = find_root(parent, i), rj = find_root(parent, j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
    std::vector<long> slot(n, -1);
    for (size_t i = 0; i < n; ++i) {
        const size_t r = find_root(parent, i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(rep.classes.size());
            rep.classes.emplace_back();
        }
        rep.classes[static_cast<size_t>(slot[r])].push_back(i);
    }
    rep.entries = std::move(entries);
    return rep;
}

}  // namespace hopfact
