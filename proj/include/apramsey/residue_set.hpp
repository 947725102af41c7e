#pragma once

#include "apramsey/errors.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace apramsey {

// A subset of Z/pZ with members stored canonically in [0, p). Fixed-size
// bit storage keeps membership O(1) inside the verification loops; the cap
// of 512 is far above every parameter set this tool handles (p <= 83 in the
// certificate constructions, p <= 45 in the searches).
class ResidueSet {
public:
    static constexpr int kMaxModulus = 512;

    explicit ResidueSet(int modulus);
    ResidueSet(int modulus, std::initializer_list<int> members);
    static ResidueSet of(int modulus, const std::vector<int>& members);
    static ResidueSet range(int modulus, int first, int last);  // inclusive
    static ResidueSet full(int modulus);

    int modulus() const { return modulus_; }
    int size() const;
    bool empty() const { return size() == 0; }

    // r must already be reduced into [0, modulus).
    bool contains(int r) const {
        return (bits_[static_cast<unsigned>(r) >> 6] >> (static_cast<unsigned>(r) & 63u)) & 1u;
    }

    void insert(int r);
    void erase(int r);

    ResidueSet complement() const;
    ResidueSet translate(long long t) const;
    // Lexicographically least translate (on ascending element sequences);
    // used to deduplicate search output.
    ResidueSet canonical_translate() const;

    ResidueSet united(const ResidueSet& other) const;
    bool disjoint_with(const ResidueSet& other) const;
    bool subset_of(const ResidueSet& other) const;

    std::vector<int> elements() const;

    bool operator==(const ResidueSet& other) const;
    bool lex_less(const ResidueSet& other) const;

private:
    int modulus_;
    std::array<std::uint64_t, kMaxModulus / 64> bits_{};

    void check_member(int r) const;
};

// Trial division; sufficient for the moduli this library accepts.
bool is_prime(int n);

// R_p (include_zero) or R_p* for an odd prime p; NotOddPrime otherwise.
ResidueSet quadratic_residues(int p, bool include_zero);

// Compact rendering: "0..6", "0,5,10", "0..3,16..18"; "-" for the empty set.
std::string to_string(const ResidueSet& s);

}  // namespace apramsey
