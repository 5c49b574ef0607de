#include "gfano/d3.hpp"
#include "gfano/errors.hpp"
#include "gfano/hauptmodul.hpp"
#include "gfano/json_io.hpp"
#include "gfano/mathieu.hpp"
#include "gfano/periods.hpp"
#include "gfano/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace gfano;

// Coefficients cross the boundary as canonical "p/q" strings; the Python
// side turns them into Fractions.
using Coeffs = std::vector<std::string>;

namespace {

Coeffs out(const TruncatedSeries& s) {
  Coeffs c;
  for (const auto& x : s.coefficients()) c.push_back(to_string(x));
  return c;
}

TruncatedSeries in(const Coeffs& c) {
  if (c.empty()) throw py::value_error("empty coefficient list");
  std::vector<Rational> v;
  for (const auto& x : c) v.push_back(parse_rational(x));
  return TruncatedSeries(std::move(v));
}

std::pair<std::string, Coeffs> out_q(const QExpansion& q) { return {to_string(q.offset()), out(q.body())}; }

D3Operator op_in(const Coeffs& b) {
  if (b.size() != 5) throw py::value_error("a D3 operator has five parameters");
  return {parse_rational(b[0]), parse_rational(b[1]), parse_rational(b[2]), parse_rational(b[3]),
          parse_rational(b[4])};
}

}  // namespace

PYBIND11_MODULE(_gfano, m) {
  m.doc() = "exact q-series and period checks";

  py::register_exception<Error>(m, "GfanoError", PyExc_ValueError);

  m.def("multiply", [](const Coeffs& a, const Coeffs& b) { return out(in(a) * in(b)); });
  m.def("divide", [](const Coeffs& a, const Coeffs& b) { return out(divide(in(a), in(b))); });
  m.def("compose", [](const Coeffs& a, const Coeffs& b) { return out(compose(in(a), in(b))); }, "outer"_a,
        "inner"_a);
  m.def("reverse", [](const Coeffs& a) { return out(reverse(in(a))); });
  m.def("pow_rational", [](const Coeffs& a, const std::string& e) { return out(pow_rational(in(a), parse_rational(e))); });
  m.def("laplace", [](const Coeffs& a) { return out(laplace(in(a))); });
  m.def("inverse_laplace", [](const Coeffs& a) { return out(inverse_laplace(in(a))); });
  m.def("regular_shift", [](const Coeffs& a, const std::string& s) { return out(regular_shift(in(a), parse_rational(s))); });
  m.def("normalize", [](const Coeffs& a) { return out(normalize(in(a))); });

  m.def("eta_product",
        [](const std::map<int, int>& exps, int order) { return out_q(eta_product(exps, order)); }, "exponents"_a,
        "order"_a, "(offset, body) of prod eta(q^i)^a_i");
  m.def("klein_j", [](int order) { return out_q(klein_j(order)); });
  m.def("hauptmodul", [](const std::string& label, const std::string& c, int order) {
    return out_q(hauptmodul({label, parse_rational(c)}, order));
  }, "label"_a, "c"_a, "order"_a);
  m.def("mirror_map", [](const std::string& label, const std::string& c, int order) {
    return out(mirror_map(hauptmodul({label, parse_rational(c)}, order)));
  }, "label"_a, "c"_a, "order"_a);

  m.def("catalog_operator", [](const std::string& key) {
    const auto& op = catalog_operator(key);
    return Coeffs{to_string(op.b1), to_string(op.b2), to_string(op.b3), to_string(op.b4), to_string(op.b5)};
  });
  m.def("holomorphic_solution", [](const Coeffs& b, int order) { return out(holomorphic_solution(op_in(b), order)); },
        "b"_a, "order"_a);
  m.def("apply_operator", [](const Coeffs& b, const Coeffs& f) { return out(apply(op_in(b), in(f))); });

  m.def("iseries", [](const std::string& key, int order) { return out(iseries(parse_family(key), order)); });
  m.def("gseries", [](const std::string& key, int order) { return out(gseries(parse_family(key), order)); });
  m.def("families_json", [] {
    Json arr = Json::array();
    for (const auto& d : families()) arr.push_back(descriptor_to_json(d));
    return arr.dump();
  });

  m.def("verify_identity_json", [](const std::string& key, const std::string& s, const std::string& c, int order) {
    py::gil_scoped_release release;
    return report_to_json(verify_identity(parse_family(key), parse_rational(s), parse_rational(c), order)).dump();
  }, "family"_a, "s"_a, "c"_a, "order"_a);
  m.def("verify_all_json", [](int order) {
    std::vector<IdentityReport> reports;
    {
      py::gil_scoped_release release;
      reports = verify_all(order);
    }
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump();
  });

  m.def("epsilon", [](long n) { return to_string(epsilon(n)); });
  m.def("iota", [](long n) { return to_string(iota(n)); });
  m.def("frame_shape", [](const std::string& text) {
    const auto s = parse_frame_shape(text);
    return py::dict("order"_a = s.order(), "level"_a = s.level(), "weight"_a = to_string(s.weight()),
                    "fixed_points"_a = s.fixed_points());
  });
  m.def("hecke_check_json", [](const std::string& shape, int bound, int prime_bound) {
    return hecke_to_json(hecke_eigenform_check(parse_frame_shape(shape), bound, prime_bound)).dump();
  });
}
