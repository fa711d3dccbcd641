#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "purecubic/errors.hpp"
#include "purecubic/ideals.hpp"
#include "purecubic/reduced.hpp"
#include "purecubic/sequences.hpp"

namespace py = pybind11;
using namespace purecubic;

namespace {

py::int_ to_py(const Integer& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& obj) { return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(obj))).cast<std::string>()); }

Vector3 point_from(const py::sequence& s) {
  if (py::len(s) != 3) throw py::value_error("expected three coordinates");
  return {from_py(s[0]), from_py(s[1]), from_py(s[2])};
}

py::tuple point_to(const Vector3& v) { return py::make_tuple(to_py(v[0]), to_py(v[1]), to_py(v[2])); }

IdealForm form_from(const py::sequence& s) {
  if (py::len(s) != 6) throw py::value_error("expected (a, b, c, d, e, f)");
  return {from_py(s[0]), from_py(s[1]), from_py(s[2]), from_py(s[3]), from_py(s[4]), from_py(s[5])};
}

py::tuple form_to(const IdealForm& g) {
  return py::make_tuple(to_py(g.a), to_py(g.b), to_py(g.c), to_py(g.d), to_py(g.e), to_py(g.f));
}

py::list forms_to(const std::vector<IdealForm>& forms) {
  py::list out;
  for (const IdealForm& g : forms) out.append(form_to(g));
  return out;
}

Vector3 integral_point(const FieldElement& el) {
  if (!el.is_integral()) throw InternalError("expected an algebraic integer");
  return el.integer_coordinates();
}

SequenceOptions options_for(long iteration_cap, bool four_corner) {
  SequenceOptions o;
  o.iteration_cap = iteration_cap;
  o.mode = four_corner ? SearchMode::FourCorner : SearchMode::Exhaustive;
  return o;
}

}  // namespace

PYBIND11_MODULE(purecubic, mod) {
  mod.doc() = "Reduced ideals, minimal sequences and fundamental units of pure cubic fields Q(m^(1/3)).";

  static py::exception<Error> base(mod, "PurecubicError");
  py::register_exception<InvalidModulus>(mod, "InvalidModulus", PyExc_ValueError);
  py::register_exception<IterationCapExceeded>(mod, "IterationCapExceeded", base.ptr());
  py::register_exception<NotAnIdeal>(mod, "NotAnIdeal", base.ptr());
  py::register_exception<NotPrimitive>(mod, "NotPrimitive", base.ptr());
  py::register_exception<NotReduced>(mod, "NotReduced", base.ptr());
  py::register_exception<NotMinimalElement>(mod, "NotMinimalElement", base.ptr());
  py::register_exception<GeneratorMismatch>(mod, "GeneratorMismatch", base.ptr());
  py::register_exception<RankDeficient>(mod, "RankDeficient", base.ptr());

  mod.def(
      "field",
      [](std::int64_t m) {
        const FieldContext ctx = build_context(m);
        py::dict d;
        d["m"] = ctx.m();
        d["h"] = ctx.h();
        d["k"] = ctx.k();
        d["sigma"] = ctx.sigma();
        d["sign"] = ctx.sign();
        return d;
      },
      py::arg("m"), "Field constants m, h, k, sigma, sign; raises InvalidModulus.");

  mod.def(
      "canonical_form",
      [](const std::vector<py::sequence>& generators) {
        std::vector<Vector3> g;
        for (const py::sequence& s : generators) g.push_back(point_from(s));
        return form_to(canonicalize(g));
      },
      py::arg("generators"), "Canonical sextuple of the lattice spanned by integer triples.");

  mod.def(
      "is_ideal", [](std::int64_t m, const py::sequence& form) { return is_ideal(form_from(form), build_context(m)); },
      py::arg("m"), py::arg("form"));
  mod.def(
      "is_reduced",
      [](std::int64_t m, const py::sequence& form) { return is_reduced(form_from(form), build_context(m)); },
      py::arg("m"), py::arg("form"));
  mod.def(
      "primitive_ideals",
      [](std::int64_t m, const py::int_& length) {
        return forms_to(enumerate_primitive_ideals(build_context(m), from_py(length)));
      },
      py::arg("m"), py::arg("length"));
  mod.def(
      "reduced_ideals", [](std::int64_t m) { return forms_to(enumerate_reduced(build_context(m))); }, py::arg("m"));
  mod.def(
      "upper_bound_length", [](std::int64_t m) { return to_py(upper_bound_length(build_context(m))); },
      py::arg("m"));
  mod.def(
      "principal_ideal",
      [](std::int64_t m, const py::sequence& g) { return form_to(principal_ideal(build_context(m), point_from(g))); },
      py::arg("m"), py::arg("generator"));

  mod.def(
      "norm",
      [](std::int64_t m, const py::sequence& p) {
        const Rational n = norm_exact(build_context(m), FieldElement::from_integers(point_from(p)));
        return to_py(n.get_num());
      },
      py::arg("m"), py::arg("point"));
  mod.def(
      "value",
      [](std::int64_t m, const py::sequence& p, int digits) {
        return val(build_context(m), FieldElement::from_integers(point_from(p))).to_decimal(digits);
      },
      py::arg("m"), py::arg("point"), py::arg("digits") = 10, "Decimal string of x + y*alpha + z*theta.");

  mod.def(
      "minimal_sequence",
      [](std::int64_t m, long count, bool four_corner, long iteration_cap) {
        py::list out;
        for (const SequenceState& s : minimal_sequence(build_context(m), count, options_for(iteration_cap, four_corner))) {
          py::dict d;
          d["n"] = s.n;
          d["point"] = point_to(s.point);
          d["norm"] = to_py(s.norm);
          out.append(d);
        }
        return out;
      },
      py::arg("m"), py::arg("count"), py::arg("four_corner") = false, py::arg("iteration_cap") = 1'000'000);

  mod.def(
      "fundamental_unit",
      [](std::int64_t m, long iteration_cap, int digits) {
        const FieldContext ctx = build_context(m);
        const SequenceResult r = detect_period(ctx, options_for(iteration_cap, false));
        py::dict d;
        d["period"] = r.period;
        d["epsilon0"] = point_to(integral_point(r.fundamental_unit));
        d["value"] = val(ctx, r.fundamental_unit).to_decimal(digits);
        py::list norms, elements;
        for (const Integer& n : r.norm_period) norms.append(to_py(n));
        for (const FieldElement& e : r.minimal_elements) elements.append(point_to(integral_point(e)));
        d["norms"] = norms;
        d["minimal_elements"] = elements;
        return d;
      },
      py::arg("m"), py::arg("iteration_cap") = 1'000'000, py::arg("digits") = 10);

  mod.def(
      "map_F",
      [](std::int64_t m, const py::sequence& gamma) {
        const FieldContext ctx = build_context(m);
        return form_to(map_F(ctx, detect_period(ctx), FieldElement::from_integers(point_from(gamma))));
      },
      py::arg("m"), py::arg("gamma"), "Reduced ideal (L / gamma) for a minimal element gamma.");
  mod.def(
      "map_G",
      [](std::int64_t m, const py::sequence& ideal, const py::sequence& generator) {
        const FieldContext ctx = build_context(m);
        const FieldElement g =
            map_G(ctx, detect_period(ctx), form_from(ideal), FieldElement::from_integers(point_from(generator)));
        return point_to(integral_point(g));
      },
      py::arg("m"), py::arg("ideal"), py::arg("generator"), "Minimal element in [1, epsilon0) for a generated ideal.");
  mod.def(
      "ideal_generator",
      [](std::int64_t m, const py::sequence& gamma) {
        const FieldContext ctx = build_context(m);
        const FieldElement g = FieldElement::from_integers(point_from(gamma));
        return point_to(integral_point(scale(Rational(denominator_length(ctx, g)), invert(ctx, g))));
      },
      py::arg("m"), py::arg("gamma"), "L / gamma, the generator of F(gamma).");
  mod.def(
      "denominator_length",
      [](std::int64_t m, const py::sequence& gamma) {
        return to_py(denominator_length(build_context(m), FieldElement::from_integers(point_from(gamma))));
      },
      py::arg("m"), py::arg("gamma"));
}
