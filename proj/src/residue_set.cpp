#include "apramsey/residue_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace apramsey {

ResidueSet::ResidueSet(int modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus > kMaxModulus)
        throw ParameterOutOfRange("residue set modulus must lie in [2, " +
                                  std::to_string(kMaxModulus) + "], got " + std::to_string(modulus));
}

ResidueSet::ResidueSet(int modulus, std::initializer_list<int> members) : ResidueSet(modulus) {
    for (int r : members) insert(r);
}

ResidueSet ResidueSet::of(int modulus, const std::vector<int>& members) {
    ResidueSet s(modulus);
    for (int r : members) s.insert(r);
    return s;
}

ResidueSet ResidueSet::range(int modulus, int first, int last) {
    ResidueSet s(modulus);
    for (int r = first; r <= last; ++r) s.insert(r);
    return s;
}

ResidueSet ResidueSet::full(int modulus) {
    return range(modulus, 0, modulus - 1);
}

void ResidueSet::check_member(int r) const {
    if (r < 0 || r >= modulus_)
        throw ParameterOutOfRange("residue " + std::to_string(r) + " outside [0, " +
                                  std::to_string(modulus_ - 1) + "]");
}

int ResidueSet::size() const {
    int n = 0;
    for (auto w : bits_) n += std::popcount(w);
    return n;
}

void ResidueSet::insert(int r) {
    check_member(r);
    bits_[static_cast<unsigned>(r) >> 6] |= std::uint64_t{1} << (r & 63);
}

void ResidueSet::erase(int r) {
    check_member(r);
    bits_[static_cast<unsigned>(r) >> 6] &= ~(std::uint64_t{1} << (r & 63));
}

ResidueSet ResidueSet::complement() const {
    ResidueSet out(modulus_);
    for (int r = 0; r < modulus_; ++r)
        if (!contains(r)) out.insert(r);
    return out;
}

ResidueSet ResidueSet::translate(long long t) const {
    int shift = static_cast<int>(((t % modulus_) + modulus_) % modulus_);
    ResidueSet out(modulus_);
    for (int r = 0; r < modulus_; ++r)
        if (contains(r)) {
            int s = r + shift;
            if (s >= modulus_) s -= modulus_;
            out.insert(s);
        }
    return out;
}

ResidueSet ResidueSet::canonical_translate() const {
    ResidueSet best = *this;
    for (int t = 1; t < modulus_; ++t) {
        ResidueSet cand = translate(t);
        if (cand.lex_less(best)) best = cand;
    }
    return best;
}

ResidueSet ResidueSet::united(const ResidueSet& other) const {
    if (other.modulus_ != modulus_)
        throw ParameterOutOfRange("union of residue sets with different moduli");
    ResidueSet out(modulus_);
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] | other.bits_[i];
    return out;
}

bool ResidueSet::disjoint_with(const ResidueSet& other) const {
    if (other.modulus_ != modulus_)
        throw ParameterOutOfRange("comparing residue sets with different moduli");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & other.bits_[i]) return false;
    return true;
}

bool ResidueSet::subset_of(const ResidueSet& other) const {
    if (other.modulus_ != modulus_)
        throw ParameterOutOfRange("comparing residue sets with different moduli");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

std::vector<int> ResidueSet::elements() const {
    std::vector<int> out;
    for (int r = 0; r < modulus_; ++r)
        if (contains(r)) out.push_back(r);
    return out;
}

bool ResidueSet::operator==(const ResidueSet& other) const {
    return modulus_ == other.modulus_ && bits_ == other.bits_;
}

bool ResidueSet::lex_less(const ResidueSet& other) const {
    auto a = elements();
    auto b = other.elements();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

ResidueSet quadratic_residues(int p, bool include_zero) {
    if (p == 2 || !is_prime(p))
        throw NotOddPrime(std::to_string(p) + " is not an odd prime");
    ResidueSet s(p);
    for (int x = include_zero ? 0 : 1; x < p; ++x)
        s.insert(static_cast<int>((static_cast<long long>(x) * x) % p));
    return s;
}

std::string to_string(const ResidueSet& s) {
    auto el = s.elements();
    if (el.empty()) return "-";
    std::ostringstream out;
    std::size_t i = 0;
    while (i < el.size()) {
        std::size_t j = i;
        while (j + 1 < el.size() && el[j + 1] == el[j] + 1) ++j;
        if (i > 0) out << ',';
        if (j > i + 1)
            out << el[i] << ".." << el[j];
        else if (j == i + 1)
            out << el[i] << ',' << el[j];
        else
            out << el[i];
        i = j + 1;
    }
    return out.str();
}

}  // namespace apramsey
