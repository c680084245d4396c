#pragma once

// Field extensions GF(2^k) -> GF(2^(k*d)) with explicit embeddings.
//
// An Embedding maps the source generator t to a chosen root r of the source
// modulus inside the target field (the smallest root by bit value, so the
// map is canonical and reproducible).  Embeddings are interned per
// (src, dst) pair; apply/preimage are F_2-linear.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hyp2/upoly.hpp"

namespace hyp2 {

class Embedding {
public:
    const FieldCtx& src() const { return *src_; }
    const FieldCtx& dst() const { return *dst_; }
    bool is_identity() const { return src_ == dst_; }

    Elem apply(const Elem& x) const {
        if (x.field != src_) throw FieldError("embedding applied to element of the wrong field");
        if (is_identity()) return x;
        Elem acc = dst_->zero();
        std::uint64_t bits = x.bits;
        while (bits) {
            int j = __builtin_ctzll(bits);
            acc = acc + gen_pow_[static_cast<std::size_t>(j)];
            bits &= bits - 1;
        }
        return acc;
    }

    // Inverse on the image; FieldError when the element is not in the
    // embedded subfield.
    Elem preimage(const Elem& y) const {
        if (y.field != dst_) throw FieldError("preimage of element of the wrong field");
        if (is_identity()) return y;
        const unsigned k = src_->degree(), n = dst_->degree();
        // solve sum_j c_j * gen_pow[j] = y over F_2
        std::vector<std::uint64_t> rows(n, 0); // row i: k coefficient bits | augmented bit at position k
        for (unsigned j = 0; j < k; ++j) {
            std::uint64_t img = gen_pow_[j].bits;
            for (unsigned i = 0; i < n; ++i)
                if ((img >> i) & 1) rows[i] |= std::uint64_t(1) << j;
        }
        for (unsigned i = 0; i < n; ++i)
            if ((y.bits >> i) & 1) rows[i] |= std::uint64_t(1) << k;

        std::uint64_t sol = 0;
        unsigned row = 0;
        std::vector<int> pivot(k, -1);
        for (unsigned col = 0; col < k && row < n; ++col) {
            unsigned p = row;
            while (p < n && !((rows[p] >> col) & 1)) ++p;
            if (p == n) continue;
            std::swap(rows[p], rows[row]);
            for (unsigned r = 0; r < n; ++r)
                if (r != row && ((rows[r] >> col) & 1)) rows[r] ^= rows[row];
            pivot[col] = static_cast<int>(row);
            ++row;
        }
        for (unsigned r = row; r < n; ++r)
            if ((rows[r] >> k) & 1)
                throw FieldError("element " + to_hex(y) + " not in the embedded copy of "
                                 + src_->spec_string());
        for (unsigned col = 0; col < k; ++col)
            if (pivot[col] >= 0 && ((rows[static_cast<unsigned>(pivot[col])] >> k) & 1))
                sol |= std::uint64_t(1) << col;
        Elem x = src_->elem(sol);
        if (apply(x) != y)
            throw FieldError("element " + to_hex(y) + " not in the embedded copy of "
                             + src_->spec_string());
        return x;
    }

private:
    friend const Embedding& embed_into(const FieldCtx&, const FieldCtx&);

    Embedding(const FieldCtx& s, const FieldCtx& d) : src_(&s), dst_(&d) {
        if (src_ == dst_) return;
        if (d.degree() % s.degree() != 0)
            throw FieldError("no embedding " + s.spec_string() + " -> " + d.spec_string()
                             + " (degree does not divide)");
        // coefficients of the source modulus, read as 0/1 elements of dst
        std::vector<Elem> mc;
        for (unsigned i = 0; i <= s.degree(); ++i)
            mc.push_back((s.modulus() >> i) & 1 ? d.one() : d.zero());
        UPoly f(d, std::move(mc));
        auto rs = roots_in_field(f);
        if (rs.size() != s.degree())
            throw std::logic_error("source modulus did not split in the target field");
        Elem r = rs.front().first;
        for (auto& [root, mult] : rs)
            if (root.bits < r.bits) r = root;
        gen_pow_.resize(s.degree());
        gen_pow_[0] = d.one();
        for (unsigned j = 1; j < s.degree(); ++j) gen_pow_[j] = gen_pow_[j - 1] * r;
    }

    const FieldCtx* src_;
    const FieldCtx* dst_;
    std::vector<Elem> gen_pow_;
};

inline const Embedding& embed_into(const FieldCtx& src, const FieldCtx& dst) {
    static std::mutex mu;
    static std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{&src, &dst}];
    if (!slot) slot.reset(new Embedding(src, dst));
    return *slot;
}

// GF(2^(k*d)) together with the embedding of the base field into it.
inline const Embedding& extend(const FieldCtx& base, unsigned d) {
    if (d == 0) throw RangeError("extension degree must be positive");
    return embed_into(base, FieldCtx::get(base.degree() * d));
}

} // namespace hyp2
