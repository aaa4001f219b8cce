// Copyright 2026 The tightdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tight/auxiliary_h.hpp"
#include "tight/design_functions.hpp"
#include "tight/errors.hpp"
#include "tight/identity_suite.hpp"
#include "tight/pipeline.hpp"
#include "tight/prime_engine.hpp"
#include "tight/search.hpp"
#include "tight/upper_bound.hpp"

namespace py = pybind11;
using namespace tight;

namespace {

// exact values cross the boundary as decimal strings; the Python layer turns
// them into int / fractions.Fraction
std::pair<std::string, std::string> rat(const ExactRational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

py::dict bound_dict(const BoundReport& rep) {
  py::dict d;
  d["s"] = rep.s;
  d["r"] = rep.r;
  d["b"] = rep.b.to_string();
  d["psi"] = rep.psi;
  d["feasible"] = rep.feasible;
  d["kappa_upper"] = rep.kappa_upper.value.to_string(30, MPFR_RNDU);
  d["kappa_stable"] = rep.kappa_upper.stable;
  d["exp_upper"] = rep.feasible ? rep.exp_upper.to_string(6, MPFR_RNDU) : std::string();
  d["v_bound"] = rep.feasible ? rep.v_bound.get_str() : std::string();
  d["record"] = rep.record();
  return d;
}

std::tuple<std::int64_t, std::int64_t, std::int64_t> key(const Hit& h) { return {h.s, h.x, h.y}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tightdesign C++ core";

  py::register_exception<WindowError>(m, "WindowError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<NotFoundBelowLimit>(m, "NotFoundBelowLimit", PyExc_LookupError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  // design functions
  m.def("lambda_si", [](std::int64_t s, std::int64_t v, std::int64_t k, std::int64_t i) {
    return rat(lambda_si(DesignCandidate::nontrivial(s, v, k), i));
  });
  m.def("alpha_si", [](std::int64_t s, std::int64_t v, std::int64_t k, std::int64_t i) {
    return rat(alpha_si(DesignCandidate::nontrivial(s, v, k), i));
  });
  m.def("h_si", [](std::int64_t s, std::int64_t v, std::int64_t k, std::int64_t i) {
    return rat(h_si(DesignCandidate::nontrivial(s, v, k), i));
  });
  m.def("alpha_xy", [](std::int64_t s, std::int64_t x, std::int64_t y, std::int64_t i) {
    return rat(alpha_xy(s, x, y, i));
  });
  m.def("intersection_numbers", [](std::int64_t s, std::int64_t v, std::int64_t k) {
    return intersection_numbers(DesignCandidate::nontrivial(s, v, k));
  });
  m.def("h_sum", [](std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k) { return rat(h_sum(s, r, v, k)); });
  m.def("g_closed", [](std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k) {
    return rat(g_closed(s, r, v, k));
  });

  // identities
  m.def(
      "verify_identities",
      [](std::int64_t s_max, unsigned workers, bool mutate) {
        std::vector<std::pair<bool, std::string>> out;
        for (const auto& r : verify_all(s_max, workers, Mutation{mutate})) out.emplace_back(r.pass, r.record());
        return out;
      },
      py::arg("s_max"), py::arg("workers") = 1, py::arg("mutate") = false,
      py::call_guard<py::gil_scoped_release>());

  // primes
  m.def("is_prime", &is_prime_u64);
  m.def(
      "prime_pi",
      [](std::uint64_t x) { return shared_sieve(x)->pi(x); },
      py::call_guard<py::gil_scoped_release>());
  m.def("rho", &rho, py::arg("s"), py::arg("limit"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "maximal_gaps",
      [](std::uint64_t limit, unsigned workers) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (const auto& g : maximal_gaps(limit, workers)) out.emplace_back(g.gap, g.first_prime);
        return out;
      },
      py::arg("limit"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

  // upper bound
  m.def(
      "v_upper",
      [](std::int64_t s, std::int64_t r, std::int64_t b_num, std::int64_t b_den, mpfr_prec_t precision) {
        return bound_dict(v_upper(s, r, Cutoff::ratio(b_num, b_den), precision));
      },
      py::arg("s"), py::arg("r"), py::arg("b_num"), py::arg("b_den") = 1, py::arg("precision") = kDefaultPrecision);
  m.def(
      "best_bound",
      [](std::int64_t s, std::int64_t r, unsigned workers) { return bound_dict(best_bound(s, r, workers)); },
      py::arg("s"), py::arg("r"), py::arg("workers") = 1);
  m.def("check_premeditation", &check_premeditation);

  // search
  m.def(
      "search",
      [](std::int64_t s_lo, std::int64_t s_hi, std::int64_t x_max, std::int64_t chunk_size, unsigned workers,
         std::int64_t i_max, const std::string& checkpoint, bool resume) {
        SearchConfig cfg;
        cfg.s_lo = s_lo;
        cfg.s_hi = s_hi;
        cfg.x_max = x_max;
        cfg.chunk_size = chunk_size;
        cfg.workers = workers;
        cfg.i_max = i_max;
        cfg.checkpoint_path = checkpoint;
        cfg.resume = resume;
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (const auto& h : run_search(cfg).hits) out.push_back(key(h));
        return out;
      },
      py::arg("s_lo"), py::arg("s_hi"), py::arg("x_max"), py::arg("chunk_size") = std::int64_t{1} << 20,
      py::arg("workers") = 1, py::arg("i_max") = 6, py::arg("checkpoint") = "", py::arg("resume") = false,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "verify_window",
      [](std::int64_t s, std::int64_t x_lo, std::int64_t x_hi, std::int64_t i_max) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (const auto& h : verify_window(s, x_lo, x_hi, i_max)) out.push_back(key(h));
        return out;
      },
      py::call_guard<py::gil_scoped_release>());

  // pipeline
  m.def(
      "run_pipeline",
      [](std::int64_t s_lo, std::int64_t s_hi, std::uint64_t sieve_limit, mpfr_prec_t precision, unsigned workers,
         const std::string& checkpoint) {
        PipelineConfig cfg;
        cfg.s_lo = s_lo;
        cfg.s_hi = s_hi;
        cfg.sieve_limit = sieve_limit;
        cfg.precision = precision;
        cfg.workers = workers;
        cfg.checkpoint_path = checkpoint;
        std::vector<std::pair<bool, std::string>> out;
        for (const auto& c : run_pipeline(cfg)) out.emplace_back(c.contradiction, c.record());
        return out;
      },
      py::arg("s_lo"), py::arg("s_hi"), py::arg("sieve_limit") = std::uint64_t{1'300'000'000},
      py::arg("precision") = kDefaultPrecision, py::arg("workers") = 1, py::arg("checkpoint") = "",
      py::call_guard<py::gil_scoped_release>());
  m.def("run_witt", [] {
    const auto rep = run_witt();
    return std::make_pair(rep.ok, rep.lines);
  });
}
