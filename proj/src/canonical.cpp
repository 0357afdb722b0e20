#include "rahp/canonical.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

#include "rahp/error.hpp"

namespace rahp {

namespace {

constexpr std::string_view kPrefix = "RA1:";
constexpr std::string_view kAlphabet =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

struct Labelling {
    std::vector<int> sequence;  // per vertex in label order: degree, then neighbour labels
    std::vector<int> label;     // vertex -> label
    int orientation = 1;
};

// Breadth-first labelling from the directed edge v0 -> rotation(v0)[i0],
// reading rotations forwards (orientation 1) or backwards (-1). Abandons the
// run as soon as it exceeds `best`.
bool label_from(const AbstractPolyhedron& P, int v0, int i0, int orientation,
                const std::vector<int>* best, Labelling& out)
{
    const int n = P.vertex_count();
    out.sequence.clear();
    out.label.assign(n, -1);
    out.orientation = orientation;
    std::vector<int> order{v0};
    std::vector<int> ref_index(n, -1);
    order.reserve(n);
    out.label[v0] = 0;
    ref_index[v0] = i0;
    bool smaller = best == nullptr;
    auto emit = [&](int value) {
        const std::size_t pos = out.sequence.size();
        out.sequence.push_back(value);
        if (smaller) return true;
        const int b = (*best)[pos];
        if (value < b) smaller = true;
        return value <= b;
    };
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        const auto& rot = P.rotation(v);
        const int d = static_cast<int>(rot.size());
        if (!emit(d)) return false;
        for (int j = 0; j < d; ++j) {
            const int w = rot[((ref_index[v] + orientation * j) % d + d) % d];
            if (out.label[w] < 0) {
                out.label[w] = static_cast<int>(order.size());
                const auto& rw = P.rotation(w);
                ref_index[w] = static_cast<int>(std::find(rw.begin(), rw.end(), v) - rw.begin());
                order.push_back(w);
            }
            if (!emit(out.label[w])) return false;
        }
    }
    return smaller;
}

Labelling best_labelling(const AbstractPolyhedron& P)
{
    Labelling best;
    Labelling trial;
    bool have = false;
    for (int v = 0; v < P.vertex_count(); ++v) {
        for (int i = 0; i < P.degree(v); ++i) {
            for (int orientation : {1, -1}) {
                if (label_from(P, v, i, orientation, have ? &best.sequence : nullptr, trial)) {
                    std::swap(best, trial);
                    have = true;
                }
            }
        }
    }
    return best;
}

int digits_for(int max_value)
{
    int w = 1;
    long long cap = 62;
    while (cap <= max_value) {
        cap *= 62;
        ++w;
    }
    return w;
}

void append_number(std::string& out, int value, int width)
{
    std::string digits(width, '0');
    for (int i = width - 1; i >= 0; --i) {
        digits[i] = kAlphabet[value % 62];
        value /= 62;
    }
    out += digits;
}

int parse_number(std::string_view text, std::size_t& pos, int width)
{
    if (pos + width > text.size()) throw Error(ErrorCode::BadInput, "truncated canonical code");
    int value = 0;
    for (int i = 0; i < width; ++i) {
        const auto k = kAlphabet.find(text[pos++]);
        if (k == std::string_view::npos)
            throw Error(ErrorCode::BadInput, "invalid character in canonical code");
        value = value * 62 + static_cast<int>(k);
    }
    return value;
}

std::vector<std::vector<int>> rotation_from(const Labelling& lab, int n)
{
    std::vector<std::vector<int>> rot(n);
    std::size_t pos = 0;
    for (int v = 0; v < n; ++v) {
        const int d = lab.sequence[pos++];
        rot[v].assign(lab.sequence.begin() + pos, lab.sequence.begin() + pos + d);
        pos += d;
    }
    return rot;
}

} // namespace

CanonicalCode canonical_code(const AbstractPolyhedron& P)
{
    const Labelling lab = best_labelling(P);
    int max_value = P.vertex_count();
    for (int v = 0; v < P.vertex_count(); ++v) max_value = std::max(max_value, P.degree(v));
    const int width = digits_for(max_value);
    std::string text(kPrefix);
    text += kAlphabet[width];
    append_number(text, P.vertex_count(), width);
    for (int x : lab.sequence) append_number(text, x, width);
    return CanonicalCode{std::move(text)};
}

AbstractPolyhedron canonical_form(const AbstractPolyhedron& P)
{
    const Labelling lab = best_labelling(P);
    AbstractPolyhedron Q = AbstractPolyhedron::from_rotation(rotation_from(lab, P.vertex_count()));
    return Q.with_tags(mapped_tags(P, Q, lab.label, lab.orientation < 0));
}

bool looks_like_code(const std::string& text)
{
    return text.rfind(kPrefix, 0) == 0;
}

AbstractPolyhedron decode(const std::string& code)
{
    std::string_view text(code);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    if (text.substr(0, kPrefix.size()) != kPrefix || text.size() < kPrefix.size() + 1)
        throw Error(ErrorCode::BadInput, "canonical code must start with RA1:");
    std::size_t pos = kPrefix.size();
    const auto width_index = kAlphabet.find(text[pos++]);
    if (width_index == std::string_view::npos || width_index == 0)
        throw Error(ErrorCode::BadInput, "invalid width in canonical code");
    const int width = static_cast<int>(width_index);
    const int n = parse_number(text, pos, width);
    if (n <= 0) throw Error(ErrorCode::BadInput, "canonical code has no vertices");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        const int d = parse_number(text, pos, width);
        for (int j = 0; j < d; ++j) rot[v].push_back(parse_number(text, pos, width));
    }
    if (pos != text.size()) throw Error(ErrorCode::BadInput, "trailing data in canonical code");
    return AbstractPolyhedron::from_rotation(rot);
}

} // namespace rahp
