#include "io.hpp"

#include <cstdlib>

#include "lcb/linalg/scalar.hpp"

namespace lcb::cli {

namespace {

const json& rows_of(const json& j) {
  const json& rows = j.is_object() && j.contains("rows") ? j.at("rows") : j;
  if (!rows.is_array() || rows.empty()) throw InputError("expected a matrix {\"rows\": [[...], ...]}");
  for (const auto& r : rows)
    if (!r.is_array() || r.size() != rows[0].size()) throw InputError("matrix rows must be arrays of equal length");
  return rows;
}

template <class S, class F>
linalg::Matrix<S> matrix_from(const json& j, F entry) {
  const json& rows = rows_of(j);
  linalg::Matrix<S> m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = entry(rows[r][c]);
  return m;
}

linalg::Rational exact_entry(const json& v) {
  if (v.is_string()) return linalg::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return linalg::Rational(v.get<long>());
  if (v.is_number()) return linalg::Rational(v.get<double>());
  throw InputError("matrix entries must be numbers or rational strings");
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

double round12(double x) { return std::strtod(linalg::to_string(x).c_str(), nullptr); }

json to_json(const coxeter::Permutation& s) { return s.images(); }

json to_json(const coxeter::ReducedWord& w) { return json(std::vector<int>(w.begin(), w.end())); }

json to_json(const spin::Quat& q) { return {{"sign", q.sign()}, {"exps", q.exps()}}; }

json to_json(const spin::SpinWord& z) {
  return {{"sign", z.q.sign()}, {"exps", z.q.exps()}, {"sigma", to_json(z.sigma)}};
}

json to_json(const spin::SignedPermMatrix& p) { return {{"sigma", to_json(p.sigma)}, {"signs", p.signs}}; }

json to_json(const linalg::FMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(round12(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

json to_json(const linalg::RMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(linalg::to_string(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

json to_json(const curves::ItineraryEvent& e) {
  return {{"t", round12(e.t)}, {"sigma", to_json(e.sigma)}, {"signs", to_json(e.signs)}};
}

coxeter::Permutation perm_from_text(const std::string& text) {
  try {
    return coxeter::Permutation::parse(text);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

coxeter::Permutation perm_from_json(const json& j) {
  if (j.is_string()) return perm_from_text(j.get<std::string>());
  if (j.is_object() && j.contains("sigma")) return perm_from_json(j.at("sigma"));
  if (!j.is_array()) throw InputError("expected a permutation");
  try {
    return coxeter::Permutation(j.get<std::vector<int>>());
  } catch (const json::exception&) {
    throw InputError("permutation images must be integers");
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

coxeter::ReducedWord word_from_json(const json& j) {
  const json& w = j.is_object() && j.contains("word") ? j.at("word") : j;
  if (!w.is_array()) throw InputError("expected a word as an array of generator indices");
  coxeter::ReducedWord out;
  for (const auto& v : w) {
    if (!v.is_number_integer()) throw InputError("word letters must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

spin::Quat quat_from_json(int n, const json& j) {
  if (j.is_string()) return spin::parse_quat(n, j.get<std::string>());
  if (!j.is_object() || !j.contains("sign") || !j.contains("exps")) throw InputError("expected {sign, exps}");
  try {
    return spin::Quat::from_exps(n, j.at("sign").get<int>(), j.at("exps").get<std::vector<int>>());
  } catch (const json::exception&) {
    throw InputError("sign and exps must be integers");
  }
}

spin::SpinWord spinword_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sigma")) throw InputError("expected a spin word {sign, exps, sigma}");
  auto sigma = perm_from_json(j.at("sigma"));
  spin::Quat q = j.contains("exps") ? quat_from_json(sigma.n(), j) : spin::Quat::one(sigma.n());
  if (!j.contains("exps") && j.contains("sign")) q = j.at("sign").get<int>() < 0 ? -q : q;
  return {q, sigma};
}

linalg::FMatrix fmatrix_from_json(const json& j) {
  return matrix_from<double>(j, [](const json& v) {
    if (v.is_number()) return v.get<double>();
    return exact_entry(v).get_d();
  });
}

linalg::RMatrix rmatrix_from_json(const json& j) { return matrix_from<linalg::Rational>(j, exact_entry); }

totpos::PosParams params_from_json(const json& j) {
  if (!j.is_object() || !j.contains("word") || !j.contains("times")) throw InputError("expected {word, times}");
  totpos::PosParams p;
  p.word = word_from_json(j.at("word"));
  for (const auto& t : j.at("times")) p.times.push_back(exact_entry(t));
  return p;
}

curves::ConvexCurveSpec curve_from_json(const json& j) {
  if (!j.is_object()) throw InputError("expected a curve spec object");
  if (j.contains("closed_form")) {
    if (!j.contains("n")) throw InputError("closed-form curve needs n");
    const int n = j.at("n").get<int>();
    linalg::FMatrix base = j.contains("base") ? fmatrix_from_json(j.at("base")) : linalg::FMatrix();
    auto kind = j.at("closed_form").get<std::string>();
    if (kind == "h") return curves::ConvexCurveSpec::h_curve(n, base);
    if (kind == "n") return curves::ConvexCurveSpec::n_curve(n, base);
    throw InputError("closed_form must be \"h\" or \"n\"");
  }
  if (!j.contains("grid") || !j.contains("kappas")) throw InputError("expected {grid, kappas} or {closed_form, n}");
  std::vector<linalg::Rational> grid;
  for (const auto& g : j.at("grid")) grid.push_back(exact_entry(g));
  std::vector<std::vector<linalg::Rational>> kappas;
  for (const auto& row : j.at("kappas")) {
    kappas.emplace_back();
    for (const auto& k : row) kappas.back().push_back(exact_entry(k));
  }
  if (kappas.empty()) throw InputError("kappas must be non-empty");
  auto spec = curves::ConvexCurveSpec::piecewise(static_cast<int>(kappas[0].size()), grid, kappas);
  if (j.contains("base")) spec.base = fmatrix_from_json(j.at("base"));
  return spec;
}

}  // namespace lcb::cli
