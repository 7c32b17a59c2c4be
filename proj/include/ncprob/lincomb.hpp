#pragma once

#include "ncprob/rational.hpp"

#include <map>

namespace ncprob {

// Finite formal linear combination over an ordered basis B with rational
// coefficients. Zero coefficients are never stored, so operator== is exact
// term-by-term equality.
template <typename B> class LinComb {
  public:
    using Terms = std::map<B, Rat>;

    LinComb() = default;
    LinComb(const B &b, Rat c = Rat(1))
    {
        if (c != 0)
            terms_[b] = std::move(c);
    }

    static LinComb zero() { return LinComb(); }

    const Terms &terms() const { return terms_; }
    // range-for over the object itself is safe on temporaries, unlike
    // iterating .terms() of an rvalue
    typename Terms::const_iterator begin() const { return terms_.begin(); }
    typename Terms::const_iterator end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const B &b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const B &b, const Rat &c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LinComb &operator+=(const LinComb &o)
    {
        for (const auto &[b, c] : o.terms_)
            add(b, c);
        return *this;
    }
    LinComb &operator-=(const LinComb &o)
    {
        for (const auto &[b, c] : o.terms_)
            add(b, -c);
        return *this;
    }
    LinComb &operator*=(const Rat &s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[b, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rat &s) { return a *= s; }
    friend LinComb operator*(const Rat &s, LinComb a) { return a *= s; }

    bool operator==(const LinComb &) const = default;

    // Applies f : B -> LinComb<C> linearly.
    template <typename F> auto map(F &&f) const
    {
        using C = decltype(f(std::declval<const B &>()));
        C out;
        for (const auto &[b, c] : terms_)
            out += f(b) * c;
        return out;
    }

  private:
    Terms terms_;
};

} // namespace ncprob
