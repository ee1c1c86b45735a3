#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qsp {

struct WeylParams {
    int d = 1;
    int n = 4;  // even, n = 2r + 2

    bool operator==(const WeylParams& o) const { return d == o.d && n == o.n; }
    bool operator!=(const WeylParams& o) const { return !(*this == o); }
    void validate() const;
};

using Word = std::vector<int>;

// Element of the affine Weyl group of type C_d acting on Z^d from the right:
// (f.g)_i = sign_i * f_{perm_i} + n * off_i  (0-based coordinates).
class WeylElt {
public:
    WeylElt() = default;
    static WeylElt identity(const WeylParams& p);
    static WeylElt generator(int i, const WeylParams& p);
    static WeylElt from_word(const Word& w, const WeylParams& p);
    // Inverse of str(): "s0.s1.s2", or "" / "e" for the identity.
    static WeylElt parse(std::string_view text, const WeylParams& p);

    const WeylParams& params() const { return p_; }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& sign() const { return sign_; }
    const std::vector<int>& off() const { return off_; }
    int length() const { return len_; }
    bool is_identity() const { return len_ == 0; }

    std::vector<int> act(const std::vector<int>& f) const;

    // f.(g*h) = (f.g).h
    friend WeylElt operator*(const WeylElt& g, const WeylElt& h);
    WeylElt inverse() const;
    WeylElt times_gen(int i) const;  // g s_i
    WeylElt gen_times(int i) const;  // s_i g

    bool right_descent(int i) const { return times_gen(i).length() < len_; }
    bool left_descent(int i) const { return gen_times(i).length() < len_; }

    // Greedy smallest right descent, peeled off from the right.
    Word reduced_word() const;
    std::string str() const;

    bool operator==(const WeylElt& o) const { return perm_ == o.perm_ && sign_ == o.sign_ && off_ == o.off_; }
    bool operator!=(const WeylElt& o) const { return !(*this == o); }
    bool operator<(const WeylElt& o) const;
    std::size_t hash() const;

private:
    WeylParams p_;
    std::vector<int> perm_, sign_, off_;
    int len_ = 0;
    void compute_length();
};

std::string word_str(const Word& w);

struct WeylHash {
    std::size_t operator()(const WeylElt& g) const { return g.hash(); }
};

// Subgroup generated by {s_i : i in gens}; gens must be a proper subset of {0..d}.
std::vector<WeylElt> parabolic_elements(const std::vector<int>& gens, const WeylParams& p);

// g in D_J: l(s_i g) > l(g) for i in J (minimal in W_J g).
bool is_min_right(const WeylElt& g, const std::vector<int>& gens);
// g in D_J^{-1}: l(g s_i) > l(g) for i in J (minimal in g W_J).
bool is_min_left(const WeylElt& g, const std::vector<int>& gens);
bool is_min_double(const WeylElt& g, const std::vector<int>& left_gens, const std::vector<int>& right_gens);

// W_J g W_K as a deduplicated sorted list.
std::vector<WeylElt> double_coset(const std::vector<int>& left_gens, const WeylElt& g,
                                  const std::vector<int>& right_gens);
// Minimal element of W_J g W_K.
WeylElt min_double_rep(const std::vector<int>& left_gens, const WeylElt& g, const std::vector<int>& right_gens);

// All elements of length <= max_len, grouped by length (BFS over the Cayley graph).
std::vector<std::vector<WeylElt>> elements_by_length(const WeylParams& p, int max_len);

}  // namespace qsp

template <>
struct std::hash<qsp::WeylElt> {
    std::size_t operator()(const qsp::WeylElt& g) const { return g.hash(); }
};
