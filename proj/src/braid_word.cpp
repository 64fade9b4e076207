#include "braidkit/braid_word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidkit {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    validate_();
}

void BraidWord::validate_() const {
    if (strands_ < 1) throw std::invalid_argument("strand count must be positive");
    for (int l : letters_) {
        int k = std::abs(l);
        if (k < 1 || k > strands_ - 1)
            throw std::invalid_argument("generator index out of range for strand count");
    }
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
    std::vector<int> ls = u.letters();
    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
    return BraidWord(u.strands(), std::move(ls));
}

BraidWord invert(const BraidWord& u) {
    std::vector<int> ls;
    ls.reserve(u.size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) ls.push_back(-*it);
    return BraidWord(u.strands(), std::move(ls));
}

BraidWord pow(const BraidWord& u, int k) {
    const BraidWord base = k >= 0 ? u : invert(u);
    int reps = k >= 0 ? k : -k;
    std::vector<int> ls;
    ls.reserve(base.size() * static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r)
        ls.insert(ls.end(), base.letters().begin(), base.letters().end());
    return BraidWord(u.strands(), std::move(ls));
}

std::vector<int> free_cancel_letters(std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

BraidWord free_cancel(const BraidWord& u) {
    return BraidWord(u.strands(), free_cancel_letters(u.letters()));
}

Permutation perm(const BraidWord& u) {
    Permutation acc(u.strands());
    for (int l : u.letters())
        acc = compose(acc, Permutation::transposition(u.strands(), std::abs(l)));
    return acc;
}

bool is_pure(const BraidWord& u) { return perm(u).is_identity(); }

BraidWord reflect(const BraidWord& u) {
    std::vector<int> ls;
    ls.reserve(u.size());
    for (int l : u.letters()) ls.push_back(-l);
    return BraidWord(u.strands(), std::move(ls));
}

std::string to_text(const BraidWord& u) {
    if (u.empty()) return "1";
    std::ostringstream os;
    std::size_t t = 0;
    bool first = true;
    while (t < u.size()) {
        int l = u.letter(t);
        std::size_t run = 1;
        while (t + run < u.size() && u.letter(t + run) == l) ++run;
        int e = (l > 0 ? 1 : -1) * static_cast<int>(run);
        if (!first) os << ' ';
        first = false;
        os << 's' << std::abs(l);
        if (e != 1) os << '^' << e;
        t += run;
    }
    return os.str();
}

} // namespace braidkit
