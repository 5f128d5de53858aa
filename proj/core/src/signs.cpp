#include "embrace/signs.hpp"

#include <atomic>

namespace embrace {

namespace fault {
namespace {
std::atomic<bool> g_corrupt_koszul{false};
}
void corrupt_koszul_signs(bool enabled) { g_corrupt_koszul.store(enabled); }
bool koszul_signs_corrupted() { return g_corrupt_koszul.load(); }
}  // namespace fault

SignExponent koszul_swap_sign(int deg_m, int deg_n) {
    if (fault::koszul_signs_corrupted()) return SignExponent::of(0);
    return SignExponent::of(static_cast<long long>(deg_m) * deg_n);
}

SignExponent canonical_iso_sign(int /*i*/, const std::vector<int>& shifts, int deg_phi,
                                const std::vector<int>& tensor_arg_degrees) {
    if (shifts.size() != tensor_arg_degrees.size())
        throw std::invalid_argument("canonical_iso_sign: shift/argument count mismatch");
    long long total_shift = 0;
    for (int s : shifts) total_shift += s;
    long long e = total_shift * deg_phi;
    long long left_degrees = 0;
    for (size_t l = 0; l < shifts.size(); ++l) {
        if (l > 0) e += static_cast<long long>(shifts[l]) * left_degrees;
        left_degrees += tensor_arg_degrees[l];
    }
    return SignExponent::of(e);
}

SignExponent suspension_sign(int arity, int internal_degree, const std::vector<int>& path_arg_degrees) {
    if (static_cast<int>(path_arg_degrees.size()) != arity)
        throw std::invalid_argument("suspension_sign: arity/argument count mismatch");
    std::vector<int> shifts(arity, 1);
    std::vector<int> tensor_order(path_arg_degrees.rbegin(), path_arg_degrees.rend());
    return canonical_iso_sign(1, shifts, internal_degree, tensor_order);
}

void validate_graded_morphism(const GradedQuiver& q, const GradedMorphism& f) {
    for (auto& [a, image] : f.coeffs) {
        const Arrow& ar = q.arrow(a);
        if (ar.src != f.src || ar.tgt != f.tgt)
            throw std::invalid_argument("graded morphism key arrow outside its hom space");
        for (auto& [b, c] : image) {
            const Arrow& br = q.arrow(b);
            if (br.src != f.src || br.tgt != f.tgt)
                throw std::invalid_argument("graded morphism image outside its hom space");
            if (br.degree != ar.degree + f.degree)
                throw std::invalid_argument("graded morphism image degree mismatch");
            (void)c;
        }
    }
}

std::map<std::vector<ArrowId>, Scalar> tensor_apply(const GradedQuiver& q,
                                                    const std::vector<GradedMorphism>& fs,
                                                    const std::vector<ArrowId>& tensor) {
    if (fs.size() != tensor.size()) throw std::invalid_argument("tensor_apply: length mismatch");
    const FieldSpec& field = q.field();
    // Each factor crosses every argument consumed to its left.
    SignExponent sign;
    int left_degrees = 0;
    for (size_t l = 0; l < fs.size(); ++l) {
        const Arrow& ar = q.arrow(tensor[l]);
        if (ar.src != fs[l].src || ar.tgt != fs[l].tgt)
            throw std::invalid_argument("tensor_apply: argument outside morphism hom space");
        if (l > 0) sign = sign + koszul_swap_sign(fs[l].degree, left_degrees);
        left_degrees += ar.degree;
    }

    std::map<std::vector<ArrowId>, Scalar> result;
    std::vector<std::vector<std::pair<ArrowId, Scalar>>> images;
    for (size_t l = 0; l < fs.size(); ++l) {
        auto it = fs[l].coeffs.find(tensor[l]);
        std::vector<std::pair<ArrowId, Scalar>> img;
        if (it != fs[l].coeffs.end())
            for (auto& [b, c] : it->second) img.emplace_back(b, c);
        if (img.empty()) return result;  // some factor kills the tensor
        images.push_back(std::move(img));
    }
    std::vector<size_t> idx(fs.size(), 0);
    while (true) {
        std::vector<ArrowId> key;
        Scalar coeff = sign.scalar(field);
        for (size_t l = 0; l < fs.size(); ++l) {
            key.push_back(images[l][idx[l]].first);
            coeff *= images[l][idx[l]].second;
        }
        auto it = result.find(key);
        if (it == result.end()) {
            if (!coeff.is_zero()) result.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) result.erase(it);
        }
        size_t l = 0;
        while (l < fs.size() && ++idx[l] == images[l].size()) idx[l++] = 0;
        if (l == fs.size()) break;
    }
    return result;
}

}  // namespace embrace
