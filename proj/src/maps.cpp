#include "braidkit/maps.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace braidkit {

BraidWord delete_strand(const BraidWord& u, int k) {
    const int n = u.strands();
    if (n < 2) throw std::invalid_argument("strand deletion needs at least two strands");
    if (k < 1 || k > n) throw std::invalid_argument("deleted strand out of range");
    int p = k; // current position of the deleted strand
    std::vector<int> out;
    out.reserve(u.size());
    for (int l : u.letters()) {
        const int i = std::abs(l);
        if (i == p) {
            p = i + 1;
        } else if (i + 1 == p) {
            p = i;
        } else if (i + 1 < p) {
            out.push_back(l);
        } else { // i > p
            out.push_back(l > 0 ? i - 1 : -(i - 1));
        }
    }
    return BraidWord(n - 1, std::move(out));
}

GeneratorMap::GeneratorMap(std::string name_in, int strands_in)
    : name(std::move(name_in)), strands(strands_in) {
    if (strands < 2) throw std::invalid_argument("generator map needs at least two strands");
    images.reserve(static_cast<std::size_t>(strands) * (strands - 1) / 2);
    for (int j = 2; j <= strands; ++j)
        for (int i = 1; i < j; ++i) images.push_back(PureWord::single(strands, i, j));
}

const PureWord& GeneratorMap::image(int i, int j) const {
    const std::size_t idx = AbelianVector::index_of(i, j);
    if (idx >= images.size()) throw std::invalid_argument("pair indices out of range");
    return images[idx];
}

PureWord& GeneratorMap::image(int i, int j) {
    const std::size_t idx = AbelianVector::index_of(i, j);
    if (idx >= images.size()) throw std::invalid_argument("pair indices out of range");
    return images[idx];
}

GeneratorMap identity_map(int n) { return GeneratorMap("identity", n); }

GeneratorMap theta_map(int n) {
    GeneratorMap m("theta", n);
    for (int j = 2; j <= n; ++j) {
        PureWord w(n);
        w.push(pure_letter(1, j, -1));
        w.push(pure_letter(0, j, +1));
        w.push(pure_letter(1, j, +1));
        m.image(1, j) = std::move(w);
    }
    return m;
}

GeneratorMap theta_inv_map(int n) {
    GeneratorMap m("theta-inv", n);
    for (int j = 2; j <= n; ++j) m.image(1, j) = PureWord::single(n, 0, j);
    return m;
}

GeneratorMap w_twist_map(int n) {
    if (n < 3) throw std::invalid_argument("twist map needs at least three strands");
    GeneratorMap m("w", n);
    for (int i = 1; i < n; ++i) {
        PureWord prod(n);
        prod.push(pure_letter(i, n));
        for (int k = 1; k < i; ++k) prod.push(pure_letter(k, i));
        for (int k = i + 1; k < n; ++k) prod.push(pure_letter(i, k));
        m.image(i, n) = invert(prod);
    }
    return m;
}

namespace {

void apply_letter(const GeneratorMap& m, const PureLetter& l, PureWord& out) {
    if (l.i == 0) {
        PureWord zr = a0(l.j, m.strands); // standard letters only
        if (l.sign < 0) zr = invert(zr);
        for (const PureLetter& sl : zr.letters()) apply_letter(m, sl, out);
        return;
    }
    if (l.sign > 0)
        out.append(m.image(l.i, l.j));
    else
        out.append(invert(m.image(l.i, l.j)));
}

} // namespace

PureWord apply_map(const GeneratorMap& m, const PureWord& w) {
    if (m.strands != w.strands()) throw std::invalid_argument("strand count mismatch");
    PureWord out(m.strands);
    for (const PureLetter& l : w.letters()) apply_letter(m, l, out);
    return out;
}

PureWord theta(const PureWord& w) { return apply_map(theta_map(w.strands()), w); }

PureWord theta_inv(const PureWord& w) { return apply_map(theta_inv_map(w.strands()), w); }

PureWord w_map(const PureWord& w) { return apply_map(w_twist_map(w.strands()), w); }

BraidWord del(const PureWord& w) { return delete_strand(expand(theta(w)), 1); }

BraidWord del_braid(const BraidWord& u, const OracleLimits& limits) {
    return del(comb(u, limits));
}

BraidWord conjugate(const BraidWord& x, const BraidWord& b) {
    return concat(concat(invert(b), x), b);
}

BraidWord commutator(const BraidWord& x, const BraidWord& y) {
    return concat(concat(concat(invert(x), invert(y)), x), y);
}

} // namespace braidkit
