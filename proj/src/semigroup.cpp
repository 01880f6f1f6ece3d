#include "cgf/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cgf {

namespace {

// Dijkstra over residues mod m = min(gens): apery[r] = shortest non-negative
// integer combination landing in class r.
std::vector<long long> compute_apery(const std::vector<long long>& gens) {
    const long long m = gens.front();
    std::vector<long long> dist(static_cast<std::size_t>(m), -1);
    using Node = std::pair<long long, long long>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
    heap.emplace(0, 0);
    while (!heap.empty()) {
        auto [val, r] = heap.top();
        heap.pop();
        if (dist[r] != -1) continue;
        dist[r] = val;
        for (long long g : gens) {
            long long nr = (r + g) % m;
            if (dist[nr] == -1) heap.emplace(val + g, nr);
        }
    }
    return dist;  // every class reachable since gcd = 1
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<long long> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("GeneratorSet: empty generator set");
    for (long long g : gens_)
        if (g < 1) throw std::invalid_argument("GeneratorSet: generators must be >= 1");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    gcd_ = 0;
    for (long long g : gens_) gcd_ = std::gcd(gcd_, g);
    reduced_.reserve(gens_.size());
    for (long long g : gens_) reduced_.push_back(g / gcd_);
    apery_ = compute_apery(reduced_);
}

bool semigroup_contains(const GeneratorSet& S, long long x) {
    if (x < 0) return false;
    if (x % S.gcd() != 0) return false;
    const long long y = x / S.gcd();
    const long long m = S.reduced().front();
    return y >= S.apery()[static_cast<std::size_t>(y % m)];
}

const std::vector<long long>& apery_set(const GeneratorSet& S) {
    if (S.gcd() != 1) throw std::invalid_argument("apery_set: gcd(S) must be 1");
    return S.apery();
}

long long frobenius_number(const GeneratorSet& S) {
    if (S.gcd() != 1) throw std::invalid_argument("frobenius_number: gcd(S) must be 1");
    const long long m = S.reduced().front();
    const long long top = *std::max_element(S.apery().begin(), S.apery().end());
    return top - m;  // -1 when 1 generates everything
}

long long selmer_bound(const GeneratorSet& S) {
    if (S.gcd() != 1) throw std::invalid_argument("selmer_bound: gcd(S) must be 1");
    if (S.gens().size() < 2) throw std::invalid_argument("selmer_bound: need #S >= 2");
    // Erdos-Graham form with the two largest generators; since the set holds
    // n distinct positive integers, max >= n and the bound never degenerates.
    const long long hi = S.gens().back();
    const long long second = S.gens()[S.gens().size() - 2];
    const long long n = static_cast<long long>(S.gens().size());
    return 2 * second * (hi / n) - hi;
}

long long count_representable(const std::vector<long long>& A, const GeneratorSet& S) {
    long long count = 0;
    for (long long a : A)
        if (semigroup_contains(S, a)) ++count;
    return count;
}

}  // namespace cgf
