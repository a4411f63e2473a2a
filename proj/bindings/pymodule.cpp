// Python bindings for the counting engines.  Exposes the closed-form Euler
// characteristics and their brute-force oracles for both families, the
// classical fiber counts, window enumeration, and the basic combinatorial
// counting helpers.  Arbitrary-precision results cross the boundary as
// native Python integers via their decimal representation, so no count is
// ever truncated.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "springer/combinatorics.hpp"
#include "springer/errors.hpp"
#include "springer/type_a.hpp"
#include "springer/type_c.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const springer::Int& x) {
  const std::string text = x.str();
  PyObject* obj = PyLong_FromString(text.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

std::vector<std::vector<long>> window_list_sl(int n, long s, long m) {
  std::vector<std::vector<long>> out;
  for (const springer::WindowVector& w : springer::enumerate_R(n, s, m))
    out.push_back(w.r);
  return out;
}

std::vector<std::vector<long>> window_list_sp(int n, long s, int m) {
  std::vector<std::vector<long>> out;
  for (const springer::SpWindowVector& w : springer::enumerate_R_sp(n, s, m))
    out.push_back(w.r);
  return out;
}

long default_width_sl(const springer::Partition& parts) {
  int n = 0;
  for (int p : parts) n += p;
  if (n < 1) throw springer::DomainError("partition: total must be positive");
  long s = static_cast<long>(parts.size()) + 1;
  while (springer::gcd_long(n, s) != 1) ++s;
  return s;
}

long default_width_sp(const springer::SymplecticPartition& sp) {
  if (sp.n() < 1) throw springer::DomainError("partition: total must be positive");
  long s = 2 * static_cast<long>(sp.parts.size()) + 1;
  while (springer::gcd_long(sp.n(), s) != 1) s += 2;
  return s;
}

}  // namespace

PYBIND11_MODULE(springerchi, m) {
  m.doc() =
      "Exact Euler characteristics of affine Springer fibers for the special "
      "linear and symplectic families, with brute-force oracles.";

  m.def(
      "euler_sl",
      [](int n, long s, const std::vector<int>& levels) {
        return to_py(springer::euler_sl(n, s, springer::ParahoricTypeA{n, levels}));
      },
      py::arg("n"), py::arg("s"), py::arg("levels"),
      "Closed-form fixed-point count for the special linear family.");
  m.def(
      "euler_sl_oracle",
      [](int n, long s, const std::vector<int>& levels) {
        return to_py(
            springer::euler_sl_oracle(n, s, springer::ParahoricTypeA{n, levels}));
      },
      py::arg("n"), py::arg("s"), py::arg("levels"),
      "Brute-force chain count for the special linear family.");
  m.def(
      "euler_sp",
      [](int n, long s, const std::vector<int>& levels) {
        return to_py(springer::euler_sp(n, s, levels));
      },
      py::arg("n"), py::arg("s"), py::arg("levels"),
      "Closed-form fixed-point count for the symplectic family.");
  m.def(
      "euler_sp_oracle",
      [](int n, long s, const std::vector<int>& levels) {
        return to_py(springer::euler_sp_oracle(n, s, levels));
      },
      py::arg("n"), py::arg("s"), py::arg("levels"),
      "Brute-force chain count for the symplectic family.");

  m.def(
      "springer_sl",
      [](const std::vector<int>& parts, const std::vector<int>& flag,
         std::optional<long> s) {
        const springer::Partition p(parts.begin(), parts.end());
        const long width = s ? *s : default_width_sl(p);
        return to_py(springer::springer_euler_sl(p, flag, width));
      },
      py::arg("partition"), py::arg("flag"), py::arg("s") = std::nullopt,
      "Classical fiber count for a nilpotent of the given Jordan partition.");
  m.def(
      "springer_sp",
      [](int n0, const std::vector<int>& parts, const std::vector<int>& flag,
         std::optional<long> s) {
        const springer::SymplecticPartition sp{
            n0, springer::Partition(parts.begin(), parts.end())};
        const long width = s ? *s : default_width_sp(sp);
        return to_py(springer::springer_euler_sp(sp, flag, width));
      },
      py::arg("n0"), py::arg("parts"), py::arg("flag"), py::arg("s") = std::nullopt,
      "Classical symplectic fiber count; n0 is the distinguished even block's "
      "half-size and parts the doubled blocks.");

  m.def(
      "compare_with_sl",
      [](int n, long s, const std::vector<int>& levels) {
        const springer::SpSlComparison c = springer::compare_with_sl(n, s, levels);
        return py::make_tuple(to_py(c.sp), to_py(c.sl), c.equal);
      },
      py::arg("n"), py::arg("s"), py::arg("levels"),
      "Symplectic count, the doubled-rank special linear count, and whether "
      "they agree.");

  m.def("enumerate_windows_sl", &window_list_sl, py::arg("n"), py::arg("s"),
        py::arg("m"),
        "All width-s window vectors of rank n and total m, ascending.");
  m.def("enumerate_windows_sp", &window_list_sp, py::arg("n"), py::arg("s"),
        py::arg("m"),
        "All marker-decorated symplectic windows with m markers, ascending.");
  m.def(
      "count_windows_sp",
      [](int n, long s, int m) { return to_py(springer::count_G(n, s, m)); },
      py::arg("n"), py::arg("s"), py::arg("m"),
      "Closed count of symplectic windows with m markers.");

  m.def(
      "binomial", [](long a, long b) { return to_py(springer::binomial(a, b)); },
      py::arg("a"), py::arg("b"), "Exact binomial coefficient.");
  m.def(
      "multinomial",
      [](const std::vector<int>& parts) { return to_py(springer::multinomial(parts)); },
      py::arg("parts"), "Exact multinomial coefficient of the given blocks.");
}
