#include "fcd/pdpoly.hpp"

#include "fcd/pdual.hpp"
#include "fcd/surface.hpp"

#include <bit>
#include <thread>

namespace fcd {

namespace {

std::vector<int> mask_to_chords(uint64_t mask) {
    std::vector<int> chords;
    while (mask) {
        chords.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return chords;
}

// per-range tally over a contiguous block of subset masks
void tally_range(const Diagram& d, uint64_t begin, uint64_t end, std::vector<long long>& tally) {
    for (uint64_t mask = begin; mask < end; ++mask) {
        int eps = euler_genus(partial_dual(d, mask_to_chords(mask)).diagram);
        if (eps >= static_cast<int>(tally.size())) tally.resize(static_cast<size_t>(eps) + 1, 0);
        ++tally[static_cast<size_t>(eps)];
    }
}

Polynomial tally_to_poly(const std::vector<long long>& tally) {
    Polynomial p;
    for (int eps = 0; eps < static_cast<int>(tally.size()); ++eps)
        if (tally[static_cast<size_t>(eps)] != 0)
            p = p.add(Polynomial::monomial(eps, BigInt(tally[static_cast<size_t>(eps)])));
    return p;
}

Polynomial enumerate_naive(const Diagram& d, int threads) {
    const int e = d.chord_count();
    const uint64_t total = 1ull << e;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads > 8) threads = 8;
    if (e < 10 || threads == 1) {
        std::vector<long long> tally;
        tally_range(d, 0, total, tally);
        return tally_to_poly(tally);
    }
    std::vector<std::vector<long long>> tallies(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    const uint64_t chunk = total / static_cast<uint64_t>(threads);
    for (int t = 0; t < threads; ++t) {
        uint64_t begin = chunk * static_cast<uint64_t>(t);
        uint64_t end = (t + 1 == threads) ? total : begin + chunk;
        pool.emplace_back([&d, begin, end, &out = tallies[static_cast<size_t>(t)]] {
            tally_range(d, begin, end, out);
        });
    }
    for (auto& th : pool) th.join();
    std::vector<long long> merged;
    for (const auto& t : tallies) {
        if (t.size() > merged.size()) merged.resize(t.size(), 0);
        for (size_t i = 0; i < t.size(); ++i) merged[i] += t[i];
    }
    return tally_to_poly(merged);
}

Polynomial enumerate_gray(const Diagram& d) {
    const int e = d.chord_count();
    const uint64_t total = 1ull << e;
    std::vector<long long> tally;
    auto record = [&](const Diagram& g) {
        int eps = euler_genus(g);
        if (eps >= static_cast<int>(tally.size())) tally.resize(static_cast<size_t>(eps) + 1, 0);
        ++tally[static_cast<size_t>(eps)];
    };
    Diagram current = d;
    record(current);
    for (uint64_t i = 1; i < total; ++i) {
        int toggled = std::countr_zero(i); // bit changed between consecutive Gray codes
        current = partial_dual(current, {toggled}).diagram;
        record(current);
    }
    return tally_to_poly(tally);
}

} // namespace

Polynomial partial_dual_polynomial(const Diagram& d, const PdPolyOptions& opts) {
    if (d.chord_count() > opts.cap)
        throw Error("chord count " + std::to_string(d.chord_count()) + " exceeds cap " +
                    std::to_string(opts.cap));
    return opts.mode == EnumMode::gray ? enumerate_gray(d) : enumerate_naive(d, opts.threads);
}

} // namespace fcd
