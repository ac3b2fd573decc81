#pragma once

#include <string>
#include <vector>

#include "sl2ext/product.hpp"

namespace sl2ext {

// Formal sum of scalar-weighted tuples of degree-one elements.  There is
// deliberately no equality: tensors are compared through eval() only.
struct TensorTerm {
    Fp c;
    std::vector<Graded> factors;
};

class Tensor {
public:
    explicit Tensor(int arity = 2) : arity_(arity) {}

    int arity() const { return arity_; }
    const std::vector<TensorTerm>& terms() const { return terms_; }

    void add_term(Fp c, std::vector<Graded> factors);
    void add(const Tensor& o, Fp c = Fp::raw(1));
    Tensor scaled(Fp c) const;

private:
    int arity_;
    std::vector<TensorTerm> terms_;
};

Tensor tensor(std::initializer_list<Graded> factors, Fp c = Fp::raw(1));

// The multiplication map: sum of c * (x1 x2 ... xn), multiplied left to right.
Graded eval(const Tensor& t);

enum class Side { left, right };
// Acts on the outermost factor of each term.
Tensor tensor_act(const Hecke& h, const Tensor& t, Side side);
// J reverses the factors with sign (-1)^(n(n-1)/2); Gamma acts factorwise.
Tensor involution(const Tensor& t);
Tensor gamma_varpi(const Tensor& t);

Tensor R2(const Sym& alpha);
Tensor R2(const Graded& x);
Tensor R3(const Sym& phi);
Tensor R3(const Graded& x);
Tensor R3_prime(const Sym& phi);
Tensor R3_prime(const Graded& x);

// The four summands of the averaged section at phi_1, written out literally.
std::vector<Tensor> R3_phi1_summands_literal();

struct NamedTensor {
    std::string name;
    Tensor t;
};
// Generators of the kernel of the multiplication map (15 elements).
std::vector<NamedTensor> kernel_generators();
// Generators of K_2 (14 elements).
std::vector<NamedTensor> k2_generators();

}  // namespace sl2ext
