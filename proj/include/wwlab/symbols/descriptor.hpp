#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "wwlab/symbols/symbols.hpp"

namespace wwlab {

/// Coordinate loci on which a symbol may fail to be smooth.
enum class Locus { xi, eta, sigma, xi_minus_eta, zeta };

/// Vector that vanishes on the locus at p (zeta = xi - eta - sigma).
Vec2 locus_vector(Locus l, const Point& p);
std::string locus_name(Locus l);

/// Named symbol with its homogeneity degree and singular loci.
class SymbolDescriptor {
public:
    using Evaluator = std::function<std::complex<double>(const Point&)>;

    SymbolDescriptor(std::string name, int arity, double degree, std::vector<Locus> loci, Evaluator eval);

    static SymbolDescriptor m1();
    static SymbolDescriptor m2();
    static SymbolDescriptor m3();
    static SymbolDescriptor m4();
    static SymbolDescriptor phase(const SignPattern& pattern);
    static SymbolDescriptor nf_multiplier(int l, const SignPattern& pattern);

    const std::string& name() const noexcept { return name_; }
    int arity() const noexcept { return arity_; }
    double degree() const noexcept { return degree_; }
    const std::vector<Locus>& singular_locus() const noexcept { return loci_; }

    /// True when p lies on one of the declared loci (relative tolerance).
    bool on_singular_locus(const Point& p) const;
    std::complex<double> operator()(const Point& p) const { return eval_(p); }

private:
    std::string name_;
    int arity_;
    double degree_;
    std::vector<Locus> loci_;
    Evaluator eval_;
};

}  // namespace wwlab
