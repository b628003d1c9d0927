#ifndef MACDONALD_FORMULAS_HPP
#define MACDONALD_FORMULAS_HPP

#include <string>
#include <vector>

#include "macdonald/fillings.hpp"
#include "macdonald/flipops.hpp"

namespace macd {

enum class Family { Htilde, P, J, Jack };
enum class Method { inv, quinv, inv_compact, quinv_compact, mlq, product, super_inv, super_quinv };

struct FormulaChoice {
    Family family;
    Method method;
};

bool is_valid(const FormulaChoice& c);
std::string family_name(Family f);
std::string method_name(Method m);
Family parse_family(const std::string& s);
Method parse_method(const std::string& s);

// product over all cells of 1 - q^leg t^(arm+1)
PolyQT PR(const Partition& lam);
// product over cells above the bottom row of 1 - q^(leg+1) t^(arm+1)
PolyQT PR_tilde(const Partition& lam);
// product over cells above the bottom row of 1 - q^(leg+1) t^(rarm+1)
PolyQT PR_rarm(const Partition& lam);
QTRat Pi_lambda(const Partition& lam);

// Exponent offsets in the weight denominators.  The defaults are the ones
// the formulas need; other values exist for negative controls.
struct WeightParams {
    int hhl_leg = 1;
    int hhl_arm = 1;
    int quinv_rarm = 1;
};

struct Weighted {
    Exps x;
    QTRat c;
};

Exps content_exponents(const Filling& s, int n_vars);
// q^maj t^coquinv prod (1-t)/(1-q^(leg+1) t^(rarm+1)) over cells above the
// bottom row differing from the cell below
Weighted wt_P_quinv(const Filling& s, int n_vars, const WeightParams& p = {});
// q^maj t^coinv prod (1-t)/(1-q^(leg+1) t^(arm+1)), same cell range
Weighted wt_HHL(const Filling& s, int n_vars, const WeightParams& p = {});
Weighted wt_J_quinv(const Filling& s, int n_vars);

struct BuildOptions {
    int threads = 1;  // <= 1 uses the serial reference enumeration
    WeightParams weights;
};

XPoly build(const Partition& lam, int n_vars, const FormulaChoice& choice, const BuildOptions& opt = {});
// Signed super-filling sum for the integral form.
XPoly build_J_super(const Partition& lam, int n_vars, Side stat);
JackPoly jack(const Partition& lam, int n_vars, Side method);
// number of fillings the Jack sum runs over
std::size_t jack_term_count(const Partition& lam, int n_vars, Side method);
PolyAlpha jack_weight(const Filling& s, Side method);

// Schur polynomial from semistandard tableaux of the usual row shape lam.
XPoly schur_oracle(const Partition& lam, int n_vars);

struct CheckResult {
    std::string identity;
    std::string instance;
    bool pass;
    std::string detail;
    double millis;
};

struct VerifyOptions {
    std::string suite = "all";  // all | formulas | operators
    int max_cells = 5;
    int n_vars = 3;
    int threads = 1;
    // corrupts the quinv weight denominators (rarm + 2) as a negative control
    bool inject_fault = false;
};

std::vector<CheckResult> verify_suite(const VerifyOptions& opt);

}  // namespace macd

#endif
