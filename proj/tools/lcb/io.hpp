#pragma once

#include <string>

#include "json.hpp"
#include "lcb/bruhat/bruhat.hpp"
#include "lcb/curves/curves.hpp"
#include "lcb/totpos/totpos.hpp"

// JSON conversions for the command-line tool. Keys come out sorted, so output
// is byte-stable for fixed inputs.
namespace lcb::cli {

using json = nlohmann::json;

// Thrown for malformed input; maps to the usage exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json parse_json(const std::string& text);

// Floats are rounded to 12 significant digits before serialization.
double round12(double x);

json to_json(const coxeter::Permutation& s);
json to_json(const coxeter::ReducedWord& w);
json to_json(const spin::Quat& q);
json to_json(const spin::SpinWord& z);
json to_json(const spin::SignedPermMatrix& p);
json to_json(const linalg::FMatrix& m);
json to_json(const linalg::RMatrix& m);
json to_json(const curves::ItineraryEvent& e);

// A permutation from "2413", [2,4,1,3], or any object carrying "sigma".
coxeter::Permutation perm_from_json(const json& j);
coxeter::Permutation perm_from_text(const std::string& text);
coxeter::ReducedWord word_from_json(const json& j);
spin::Quat quat_from_json(int n, const json& j);
spin::SpinWord spinword_from_json(const json& j);
// {"rows": [[...]]}; strings are parsed exactly, numbers taken as doubles.
linalg::FMatrix fmatrix_from_json(const json& j);
linalg::RMatrix rmatrix_from_json(const json& j);
totpos::PosParams params_from_json(const json& j);
curves::ConvexCurveSpec curve_from_json(const json& j);

}  // namespace lcb::cli
