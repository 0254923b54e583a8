#include "vsl/checker.hpp"
#include "vsl/constructions.hpp"
#include "vsl/explore.hpp"
#include "vsl/numtheory.hpp"
#include "vsl/report.hpp"
#include "vsl/separator.hpp"
#include "vsl/text_format.hpp"
#include "vsl/wqo.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace vsl;

namespace {

// Python ints go through their decimal text so that large values survive.
Int to_int(const py::handle& x) { return parse_int(py::str(x).cast<std::string>()); }

py::object from_int(const Int& x) { return py::module_::import("builtins").attr("int")(to_string(x)); }

IntVec to_vec(const py::sequence& xs) {
  IntVec v;
  for (const auto& x : xs) v.push_back(to_int(x));
  return v;
}

py::list from_vec(const IntVec& v) {
  py::list out;
  for (const Int& x : v) out.append(from_int(x));
  return out;
}

// configurations are (state_name, [counters]) pairs
Configuration to_config(const Vass& vass, const py::tuple& c) {
  if (c.size() != 2) throw VslError(ErrorKind::Parse, "configuration must be (state, counters)");
  return vass.config(c[0].cast<std::string>(), to_vec(c[1].cast<py::sequence>()));
}

py::tuple from_config(const Vass& vass, const Configuration& c) {
  return py::make_tuple(vass.state_name(c.state), from_vec(c.vec));
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

py::dict sidecar(const Vass& vass, const Configuration& s, const Configuration& t) {
  py::dict d;
  d["s"] = from_config(vass, s);
  d["t"] = from_config(vass, t);
  return d;
}

}  // namespace

PYBIND11_MODULE(_vsl, m) {
  m.doc() = "VASS reachability and semilinear separators";

  py::register_exception<VslError>(m, "VslError");

  py::class_<Vass>(m, "Vass")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def_property_readonly("dim", &Vass::dim)
      .def("add_state", [](Vass& v, const std::string& name) { return index(v.add_state(name)); })
      .def("add_transition",
           [](Vass& v, const std::string& src, const py::sequence& effect, const std::string& dst) {
             return v.add_transition(src, to_vec(effect), dst);
           })
      .def_property_readonly("states",
                             [](const Vass& v) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < v.num_states(); ++i)
                                 out.push_back(v.state_name(static_cast<StateId>(i)));
                               return out;
                             })
      .def_property_readonly("transitions",
                             [](const Vass& v) {
                               py::list out;
                               for (const Transition& t : v.transitions())
                                 out.append(py::make_tuple(v.state_name(t.src), from_vec(t.effect), v.state_name(t.dst)));
                               return out;
                             })
      .def("to_text", [](const Vass& v) { return format_vass(v); })
      .def_static("from_text", [](const std::string& text) { return parse_vass(text); })
      .def("__repr__", [](const Vass& v) {
        return "<Vass dim=" + std::to_string(v.dim()) + " states=" + std::to_string(v.num_states()) +
               " transitions=" + std::to_string(v.num_transitions()) + ">";
      });

  m.def("fire", [](const Vass& v, const py::tuple& c, TransitionId t) -> py::object {
    const FireResult r = fire(v, to_config(v, c), t);
    if (const auto* ok = std::get_if<Configuration>(&r)) return from_config(v, *ok);
    return py::none();
  });

  m.def("replay", [](const Vass& v, const py::tuple& s, const std::vector<TransitionId>& path) {
    const Run r = Run::replay(v, to_config(v, s), path);
    py::list out;
    for (const Configuration& c : r.configs()) out.append(from_config(v, c));
    return out;
  });

  m.def(
      "_shortest_run",
      [](const Vass& v, const py::tuple& s, const py::tuple& t, long long norm_bound, std::optional<std::size_t> max_length,
         bool prune_dead) {
        SearchBounds b;
        b.norm_bound = Int(norm_bound);
        if (max_length) b.length_bound = *max_length;
        b.prune_dead = prune_dead;
        const auto cs = to_config(v, s), ct = to_config(v, t);
        py::gil_scoped_release release;
        return dump(to_json(v, shortest_run(v, cs, ct, b)));
      },
      py::arg("vass"), py::arg("s"), py::arg("t"), py::arg("norm_bound") = 100, py::arg("max_length") = py::none(),
      py::arg("prune_dead") = true);

  m.def(
      "_decide",
      [](const Vass& v, const py::tuple& s, const py::tuple& t, std::size_t max_run_length, std::size_t max_separator_size,
         bool parallel) {
        DualSchedule sch;
        sch.max_run_length = max_run_length;
        sch.max_separator_size = max_separator_size;
        sch.parallel = parallel;
        const auto cs = to_config(v, s), ct = to_config(v, t);
        DualVerdict d;
        {
          py::gil_scoped_release release;
          d = decide_dual(v, cs, ct, sch);
        }
        auto j = to_json(v, d);
        if (d.separator) j["separator_text"] = format_semilinear(v, *d.separator);
        return dump(j);
      },
      py::arg("vass"), py::arg("s"), py::arg("t"), py::arg("max_run_length") = 64, py::arg("max_separator_size") = 4,
      py::arg("parallel") = false);

  m.def(
      "minimal_separators",
      [](const Vass& v, const py::tuple& s, const py::tuple& t, std::size_t budget) {
        const auto cs = to_config(v, s), ct = to_config(v, t);
        std::vector<SemilinearConfigSet> seps;
        {
          py::gil_scoped_release release;
          seps = minimal_separators(v, cs, ct, budget);
        }
        std::vector<std::string> out;
        for (const auto& x : seps) out.push_back(format_semilinear(v, x));
        return out;
      },
      py::arg("vass"), py::arg("s"), py::arg("t"), py::arg("budget"));

  m.def(
      "is_separator",
      [](const Vass& v, const py::tuple& s, const py::tuple& t, const std::string& text) {
        const auto c = is_separator(v, to_config(v, s), to_config(v, t), parse_semilinear(v, text));
        return py::make_tuple(to_string(c.kind), c.failed_axiom);
      },
      py::arg("vass"), py::arg("s"), py::arg("t"), py::arg("separator"));

  m.def(
      "contains",
      [](const Vass& v, const std::string& text, const py::tuple& c) {
        return member_config(to_config(v, c), parse_semilinear(v, text));
      },
      py::arg("vass"), py::arg("separator"), py::arg("config"));

  m.def("bezout_nonneg", [](const py::sequence& a, const py::handle& target) -> py::object {
    const auto sol = bezout_nonneg(to_vec(a), to_int(target));
    if (!sol) return py::none();
    return from_vec(*sol);
  });

  m.def("zero_set", [](const py::sequence& lin) {
    py::list out;
    for (const IntVec& v : zero_set(LinearFunction(to_vec(lin)))) out.append(from_vec(v));
    return out;
  });

  m.def("zero_run_path", [](const py::sequence& lin, const py::sequence& u, const py::sequence& v) -> py::object {
    const auto p = zero_run_path(LinearFunction(to_vec(lin)), to_vec(u), to_vec(v));
    if (!p) return py::none();
    py::list out;
    for (const IntVec& x : p->points) out.append(from_vec(x));
    return out;
  });

  m.def(
      "pump",
      [](const Vass& v, const py::tuple& s, const std::vector<TransitionId>& small,
         const std::vector<TransitionId>& large, std::size_t n) -> py::object {
        const Configuration src = to_config(v, s);
        const Run a = Run::replay(v, src, small), b = Run::replay(v, src, large);
        const auto e = find_embedding(a, b, Anchor::TargetAnchored);
        if (!e) return py::none();
        return py::cast(pump_run(v, a, b, *e, n).transitions());
      },
      py::arg("vass"), py::arg("s"), py::arg("small"), py::arg("large"), py::arg("n"));

  m.def(
      "build_un",
      [](std::optional<std::vector<std::pair<long long, long long>>> fractions) {
        FractionSchedule sched = FractionSchedule::standard();
        if (fractions) {
          sched.fractions.clear();
          for (auto [a, b] : *fractions) sched.fractions.emplace_back(Int(a), Int(b));
        }
        FamilyU u = build_Un(sched);
        py::dict d = sidecar(u.vass, u.initial, u.accepting);
        d["big_n"] = from_int(u.big_n);
        d["f"] = to_string(u.f);
        return py::make_tuple(std::move(u.vass), d);
      },
      py::arg("fractions") = py::none());

  m.def(
      "build_vn",
      [](std::optional<std::vector<std::pair<long long, long long>>> fractions) {
        FractionSchedule sched = FractionSchedule::standard();
        if (fractions) {
          sched.fractions.clear();
          for (auto [a, b] : *fractions) sched.fractions.emplace_back(Int(a), Int(b));
        }
        FamilyV f = build_Vn(sched);
        py::dict d = sidecar(f.vass, f.s, f.t);
        d["q"] = f.vass.state_name(f.q);
        d["a"] = from_vec(f.a);
        d["delta"] = from_vec(f.delta);
        d["big_n"] = from_int(f.big_n);
        d["f"] = to_string(f.f);
        return py::make_tuple(std::move(f.vass), d);
      },
      py::arg("fractions") = py::none());

  m.def(
      "toy_slope",
      [](const py::sequence& loop) {
        SlopeFixture f = build_toy_slope(to_vec(loop));
        py::dict d = sidecar(f.vass, f.s, f.t);
        d["q"] = f.vass.state_name(f.q);
        d["a"] = from_vec(f.a);
        d["delta"] = from_vec(f.delta);
        return py::make_tuple(std::move(f.vass), d);
      },
      py::arg("loop") = std::vector<int>{1, 2});

  m.def("zero_test_gadget", [](long long bound) {
    Gadget g = build_zero_test_gadget(Int(bound));
    py::dict d;
    d["entry"] = from_config(g.vass, g.entry);
    d["exit"] = g.vass.state_name(g.exit);
    return py::make_tuple(std::move(g.vass), d);
  });

  m.def("modification_loops", [](const py::sequence& lin1, const py::sequence& lin2) {
    py::list out;
    for (const IntVec& v : modification_loops(LinearFunction(to_vec(lin1)), LinearFunction(to_vec(lin2))))
      out.append(from_vec(v));
    return out;
  });

  m.def(
      "modify_vass",
      [](const Vass& v, const std::string& q, const py::sequence& lin1, const py::sequence& lin2) {
        return modify_vass(v, v.state(q), LinearFunction(to_vec(lin1)), LinearFunction(to_vec(lin2)));
      },
      py::arg("vass"), py::arg("q"), py::arg("lin1"), py::arg("lin2"));

  m.def(
      "_check_thm_simple",
      [](const Vass& v, const py::tuple& s, const py::tuple& t, const std::string& q, const py::sequence& a,
         const py::sequence& delta, long long norm_bound) {
        SearchBounds b;
        b.norm_bound = Int(norm_bound);
        const auto cs = to_config(v, s), ct = to_config(v, t);
        const LineSpec line{to_vec(a), to_vec(delta)};
        const StateId qs = v.state(q);
        py::gil_scoped_release release;
        return dump(to_json(v, check_thm_simple(v, cs, ct, qs, line, b)));
      },
      py::arg("vass"), py::arg("s"), py::arg("t"), py::arg("q"), py::arg("a"), py::arg("delta"),
      py::arg("norm_bound") = 50);

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
}
