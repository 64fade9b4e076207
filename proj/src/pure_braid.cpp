#include "braidkit/pure_braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidkit {

PureLetter pure_letter(int i, int j, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (i == j) throw std::invalid_argument("pure letter indices must differ");
    if (i > j) std::swap(i, j);
    if (i < 0 || j < 1) throw std::invalid_argument("pure letter indices out of range");
    return PureLetter{i, j, sign};
}

namespace {

void validate_letter(const PureLetter& l, int strands) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (l.i < 0 || l.i >= l.j || l.j > strands)
        throw std::invalid_argument("pure letter indices out of range for strand count");
}

} // namespace

PureWord::PureWord(int strands) : strands_(strands) {
    if (strands_ < 1) throw std::invalid_argument("strand count must be positive");
}

PureWord::PureWord(int strands, std::vector<PureLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw std::invalid_argument("strand count must be positive");
    for (const PureLetter& l : letters_) validate_letter(l, strands_);
}

PureWord PureWord::single(int strands, int i, int j, int sign) {
    PureWord w(strands);
    PureLetter l = pure_letter(i, j, sign);
    validate_letter(l, strands);
    w.push(l);
    return w;
}

void PureWord::append(const PureWord& w) {
    if (w.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
    if (&w == this) {
        std::vector<PureLetter> copy = w.letters_;
        letters_.insert(letters_.end(), copy.begin(), copy.end());
        return;
    }
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

PureWord concat(const PureWord& u, const PureWord& v) {
    PureWord r = u;
    r.append(v);
    return r;
}

PureWord invert(const PureWord& u) {
    PureWord r(u.strands());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        r.push(PureLetter{it->i, it->j, -it->sign});
    return r;
}

PureWord pow(const PureWord& u, int k) {
    const PureWord base = k >= 0 ? u : invert(u);
    int reps = k >= 0 ? k : -k;
    PureWord r(u.strands());
    for (int t = 0; t < reps; ++t) r.append(base);
    return r;
}

PureWord commutator_pure(const PureWord& x, const PureWord& y) {
    PureWord r = invert(x);
    r.append(invert(y));
    r.append(x);
    r.append(y);
    return r;
}

BraidWord expand_letter(int i, int j, int n) {
    PureLetter l = pure_letter(i, j); // normalizes and validates i != j
    i = l.i;
    j = l.j;
    if (i < 1 || j > n) throw std::invalid_argument("pure letter indices out of range");
    std::vector<int> ls;
    ls.reserve(2 * static_cast<std::size_t>(j - i));
    for (int k = j - 1; k > i; --k) ls.push_back(k);
    ls.push_back(i);
    ls.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k) ls.push_back(-k);
    return BraidWord(n, std::move(ls));
}

PureWord a0(int j, int n) {
    if (n < 2 || j < 1 || j > n) throw std::invalid_argument("zero-row index out of range");
    PureWord w(n);
    for (int m = n; m > j; --m) w.push(pure_letter(j, m, -1));
    for (int i = j - 1; i >= 1; --i) w.push(pure_letter(i, j, -1));
    return w;
}

PureWord full_twist(int n) {
    PureWord w(n);
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) w.push(pure_letter(i, j));
    return w;
}

BraidWord expand(const PureWord& w) {
    const int n = w.strands();
    std::vector<int> ls;
    for (const PureLetter& l : w.letters()) {
        BraidWord piece = BraidWord::trivial(n);
        if (l.i == 0) {
            piece = expand(a0(l.j, n));
        } else {
            piece = expand_letter(l.i, l.j, n);
        }
        if (l.sign < 0) piece = invert(piece);
        ls.insert(ls.end(), piece.letters().begin(), piece.letters().end());
    }
    return BraidWord(n, std::move(ls));
}

AbelianVector::AbelianVector(int strands) : strands_(strands) {
    if (strands_ < 1) throw std::invalid_argument("strand count must be positive");
    e_.assign(static_cast<std::size_t>(strands_) * (strands_ - 1) / 2, 0);
}

std::size_t AbelianVector::index_of(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i >= j) throw std::invalid_argument("pair indices out of range");
    return static_cast<std::size_t>(j - 2) * (j - 1) / 2 + static_cast<std::size_t>(i - 1);
}

std::int64_t AbelianVector::at(int i, int j) const {
    std::size_t idx = index_of(i, j);
    if (idx >= e_.size()) throw std::invalid_argument("pair indices out of range");
    return e_[idx];
}

std::int64_t& AbelianVector::at(int i, int j) {
    std::size_t idx = index_of(i, j);
    if (idx >= e_.size()) throw std::invalid_argument("pair indices out of range");
    return e_[idx];
}

bool AbelianVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::int64_t v) { return v == 0; });
}

AbelianVector abelianize(const PureWord& w) {
    AbelianVector v(w.strands());
    for (const PureLetter& l : w.letters()) {
        if (l.i == 0) {
            // zero-row letters contribute -1 on every pair through strand j
            for (int m = 1; m <= w.strands(); ++m) {
                if (m == l.j) continue;
                v.at(std::min(m, l.j), std::max(m, l.j)) -= l.sign;
            }
        } else {
            v.at(l.i, l.j) += l.sign;
        }
    }
    return v;
}

AbelianVector linking_vector(const BraidWord& u) {
    if (!is_pure(u)) throw std::invalid_argument("linking vector requires a pure braid");
    const int n = u.strands();
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) at[static_cast<std::size_t>(p)] = p + 1;
    AbelianVector cnt(n);
    for (int l : u.letters()) {
        const int i = l > 0 ? l : -l;
        int s = at[static_cast<std::size_t>(i - 1)];
        int t = at[static_cast<std::size_t>(i)];
        cnt.at(std::min(s, t), std::max(s, t)) += l > 0 ? 1 : -1;
        std::swap(at[static_cast<std::size_t>(i - 1)], at[static_cast<std::size_t>(i)]);
    }
    AbelianVector v(n);
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            std::int64_t c = cnt.at(i, j);
            if (c % 2 != 0) throw std::logic_error("odd crossing count on a pure braid");
            v.at(i, j) = c / 2;
        }
    return v;
}

std::int64_t exponent_sum(const PureWord& w, int i, int j) { return abelianize(w).at(i, j); }

std::string to_text(const PureLetter& l) {
    std::ostringstream os;
    os << "A[" << l.i << ',' << l.j << ']';
    if (l.sign < 0) os << "^-1";
    return os.str();
}

std::string to_text(const PureWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    std::size_t t = 0;
    bool first = true;
    while (t < w.size()) {
        const PureLetter& l = w.letter(t);
        std::size_t run = 1;
        while (t + run < w.size()) {
            const PureLetter& m = w.letter(t + run);
            if (m.i != l.i || m.j != l.j || m.sign != l.sign) break;
            ++run;
        }
        int e = l.sign * static_cast<int>(run);
        if (!first) os << ' ';
        first = false;
        os << "A[" << l.i << ',' << l.j << ']';
        if (e != 1) os << '^' << e;
        t += run;
    }
    return os.str();
}

std::string to_text(const AbelianVector& v) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int j = 2; j <= v.strands(); ++j)
        for (int i = 1; i < j; ++i) {
            if (!first) os << ", ";
            first = false;
            os << "e" << i << ',' << j << '=' << v.at(i, j);
        }
    os << ')';
    return os.str();
}

} // namespace braidkit
