#pragma once

#include <span>
#include <string>
#include <vector>

#include "gridsvm/types.hpp"

namespace gridsvm::kernel {

enum class Family { Linear, Polynomial, Gaussian };

// Kernel family plus hyperparameters. Polynomial is the inhomogeneous form
// (a.b + 1)^degree; Gaussian is exp(-|a-b|^2 / (2 sigma_sq)).
struct KernelSpec {
    Family family = Family::Gaussian;
    int degree = 2;         // Polynomial only
    double sigma_sq = 0.02;  // Gaussian only

    static KernelSpec linear() { return {Family::Linear, 1, 0.0}; }
    static KernelSpec polynomial(int degree) { return {Family::Polynomial, degree, 0.0}; }
    static KernelSpec gaussian(double sigma_sq = 0.02) { return {Family::Gaussian, 1, sigma_sq}; }

    // "linear" | "poly<d>" | "gaussian" | "gaussian:<sigma_sq>"
    static KernelSpec parse(const std::string& text);
    std::string to_string() const;

    void validate() const;
    bool operator==(const KernelSpec&) const = default;
};

double kernel_eval(const KernelSpec& spec, const FeatureVector& a, const FeatureVector& b);

// Square row-major matrix of pairwise kernel values.
class GramMatrix {
public:
    GramMatrix() = default;
    explicit GramMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const std::vector<double>& data() const { return data_; }

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

// Upper triangle is evaluated once and mirrored, so symmetry is bit-exact.
GramMatrix gram_matrix(const KernelSpec& spec, std::span<const FeatureVector> samples);

}  // namespace gridsvm::kernel
