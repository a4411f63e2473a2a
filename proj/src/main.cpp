// Command-line interface for the fixed-point counting engines.  Four
// subcommands: `euler` evaluates the closed-form Euler characteristic of one
// fixed-point variety (optionally cross-checked against brute enumeration),
// `springer` evaluates classical fiber counts for a nilpotent of given
// Jordan type, `verify` drives the property suites over parameter ranges,
// and `table` emits a deterministic CSV or JSON table over a parameter
// sweep, optionally fanning the independent cells out to worker threads.
//
// Exit codes: 0 success, 1 verification failure, 2 bad parameters, 3 I/O.

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "springer/combinatorics.hpp"
#include "springer/errors.hpp"
#include "springer/lattice.hpp"
#include "springer/laurent.hpp"
#include "springer/type_a.hpp"
#include "springer/type_c.hpp"

namespace {

using springer::Int;
using springer::Rat;

struct TableRow {
  std::string family;
  int n = 0;
  long s = 0;
  std::vector<int> type;
  Int chi_formula;
  std::optional<Int> chi_oracle;

  bool match() const { return chi_oracle && *chi_oracle == chi_formula; }
};

std::string join_levels(const std::vector<int>& type) {
  std::string out;
  for (size_t i = 0; i < type.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(type[i]);
  }
  return out;
}

std::string csv_line(const TableRow& row) {
  std::ostringstream os;
  os << row.family << ',' << row.n << ',' << row.s << ",\"" << join_levels(row.type)
     << "\"," << row.chi_formula << ',';
  if (row.chi_oracle) os << *row.chi_oracle << ',' << (row.match() ? "true" : "false");
  else os << ',';
  return os.str();
}

constexpr const char* kCsvHeader = "family,n,s,type,chi_formula,chi_oracle,match";

nlohmann::ordered_json json_row(const TableRow& row) {
  nlohmann::ordered_json j;
  j["family"] = row.family;
  j["n"] = row.n;
  j["s"] = row.s;
  j["type"] = row.type;
  j["chi_formula"] = row.chi_formula.str();
  if (row.chi_oracle) {
    j["chi_oracle"] = row.chi_oracle->str();
    j["match"] = row.match();
  } else {
    j["chi_oracle"] = nullptr;
    j["match"] = nullptr;
  }
  return j;
}

long parse_long(const std::string& text, const std::string& what) {
  size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(text, &pos);
  } catch (const std::exception&) {
    throw springer::DomainError(what + ": expected an integer, got '" + text + "'");
  }
  if (pos != text.size())
    throw springer::DomainError(what + ": expected an integer, got '" + text + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ','))
    out.push_back(static_cast<int>(parse_long(item, what)));
  if (!text.empty() && text.back() == ',')
    throw springer::DomainError(what + ": trailing comma in '" + text + "'");
  return out;
}

// Level sets are comma-separated sorted integers; `full` expands to the
// whole index range and `max:i` to the singleton {i}.
std::vector<int> parse_levels(const std::string& text, int lo, int hi) {
  if (text == "full") {
    std::vector<int> out;
    for (int j = lo; j <= hi; ++j) out.push_back(j);
    return out;
  }
  if (text.rfind("max:", 0) == 0)
    return {static_cast<int>(parse_long(text.substr(4), "type set"))};
  return parse_int_list(text, "type set");
}

springer::Partition parse_partition(const std::string& text) {
  const std::vector<int> parts = parse_int_list(text, "partition");
  return springer::Partition(parts.begin(), parts.end());
}

// Symplectic partitions are written n0:part,part,...; a bare integer means
// the distinguished block alone.
springer::SymplecticPartition parse_symplectic_partition(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos)
    return springer::SymplecticPartition{
        static_cast<int>(parse_long(text, "partition")), {}};
  springer::SymplecticPartition sp;
  sp.n0 = static_cast<int>(parse_long(text.substr(0, colon), "partition"));
  const std::string rest = text.substr(colon + 1);
  if (!rest.empty()) sp.parts = parse_partition(rest);
  return sp;
}

int run_euler(const std::string& family, int n, long s, const std::string& type_text,
              bool oracle) {
  TableRow row;
  row.family = family;
  row.n = n;
  row.s = s;
  if (family == "sl") {
    row.type = parse_levels(type_text, 0, n - 1);
    const springer::ParahoricTypeA type{n, row.type};
    row.chi_formula = springer::euler_sl(n, s, type);
    if (oracle) row.chi_oracle = springer::euler_sl_oracle(n, s, type);
  } else {
    row.type = parse_levels(type_text, 0, n);
    row.chi_formula = springer::euler_sp(n, s, row.type);
    if (oracle) row.chi_oracle = springer::euler_sp_oracle(n, s, row.type);
  }
  std::cout << kCsvHeader << '\n' << csv_line(row) << '\n';
  return 0;
}

// The next admissible width after s for the given family and rank.
long next_width_sl(int n, long s) {
  long s2 = s + 1;
  while (springer::gcd_long(n, s2) != 1) ++s2;
  return s2;
}

long next_width_sp(int n, long s) {
  long s2 = s + 2;
  while (springer::gcd_long(n, s2) != 1) s2 += 2;
  return s2;
}

int run_springer(const std::string& family, const std::string& partition_text,
                 const std::string& type_text, long s_flag, bool oracle) {
  TableRow row;
  row.family = family;
  if (family == "sl") {
    const springer::Partition parts = parse_partition(partition_text);
    int n = 0;
    for (int p : parts) n += p;
    if (n < 1) throw springer::DomainError("partition: total must be positive");
    row.n = n;
    row.type = parse_levels(type_text, 1, n - 1);
    long s = s_flag;
    if (s == 0) {
      s = static_cast<long>(parts.size()) + 1;
      while (springer::gcd_long(n, s) != 1) ++s;
    }
    row.s = s;
    row.chi_formula = springer::springer_euler_sl(parts, row.type, s);
    const bool full = static_cast<int>(row.type.size()) == (n > 0 ? n - 1 : 0);
    if (full) {
      std::vector<int> blocks(parts.begin(), parts.end());
      row.chi_oracle = springer::multinomial(blocks);
    } else if (oracle) {
      row.chi_oracle = springer::springer_euler_sl(parts, row.type, next_width_sl(n, s));
    }
  } else {
    const springer::SymplecticPartition sp = parse_symplectic_partition(partition_text);
    const int n = sp.n();
    if (n < 1) throw springer::DomainError("partition: total must be positive");
    row.n = n;
    row.type = parse_levels(type_text, 1, n);
    long s = s_flag;
    if (s == 0) {
      s = 2 * static_cast<long>(sp.parts.size()) + 1;
      while (springer::gcd_long(n, s) != 1) s += 2;
    }
    row.s = s;
    row.chi_formula = springer::springer_euler_sp(sp, row.type, s);
    const bool full = static_cast<int>(row.type.size()) == n;
    if (full) {
      std::vector<int> blocks = {sp.n0};
      for (int p : sp.parts) blocks.push_back(p);
      row.chi_oracle = springer::multinomial(blocks) * (Int(1) << (n - sp.n0));
    } else if (oracle) {
      row.chi_oracle = springer::springer_euler_sp(sp, row.type, next_width_sp(n, s));
    }
  }
  std::cout << kCsvHeader << '\n' << csv_line(row) << '\n';
  if (row.chi_oracle && !row.match()) {
    std::cerr << "mismatch between formula and oracle\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Verification suites.  Each check sweeps its identity over the configured
// ranges and reports the first counterexample as a message.

struct Check {
  std::string suite;
  std::string name;
  std::optional<std::string> (*run)(int n_max, long s_max);
};

std::vector<std::vector<int>> nonempty_subsets(int lo, int hi) {
  std::vector<std::vector<int>> out;
  const int width = hi - lo + 1;
  for (int mask = 1; mask < (1 << width); ++mask) {
    std::vector<int> J;
    for (int j = 0; j < width; ++j)
      if (mask & (1 << j)) J.push_back(lo + j);
    out.push_back(J);
  }
  return out;
}

bool admissible_sp_pair(int n, long s) {
  return s >= 1 && s % 2 == 1 && springer::gcd_long(n, s) == 1;
}

std::optional<std::string> check_sl_window_round_trip(int n_max, long s_max) {
  for (int n = 2; n <= n_max; ++n)
    for (long s = 1; s <= s_max; ++s) {
      if (springer::gcd_long(n, s) != 1) continue;
      for (long m = -2; m <= 2; ++m)
        for (const springer::WindowVector& r : springer::enumerate_R(n, s, m)) {
          const springer::Composition c = springer::phi(r);
          if (!(springer::phi_inverse(c, m) == r)) {
            std::ostringstream os;
            os << "n=" << n << " s=" << s << " m=" << m
               << ": first-difference round trip failed";
            return os.str();
          }
        }
    }
  return std::nullopt;
}

std::optional<std::string> check_sl_chain_round_trips(int n_max, long s_max) {
  for (int n = 2; n <= n_max; ++n)
    for (long s = 1; s <= s_max; ++s) {
      if (springer::gcd_long(n, s) != 1) continue;
      // Gap sets: subsets of [1, n] containing n.
      for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> J;
        for (int j = 0; j < n - 1; ++j)
          if (mask & (1 << j)) J.push_back(1 + j);
        J.push_back(n);
        for (const springer::ChainTuple& ch : springer::enumerate_chains(J, s, 0)) {
          const springer::StepAssignment sig = springer::sigma_of_chain(ch);
          if (!(springer::chain_of_sigma(sig) == ch)) {
            std::ostringstream os;
            os << "n=" << n << " s=" << s << " J=" << join_levels(J)
               << ": chain/step-function round trip failed";
            return os.str();
          }
          const springer::IntersectionMatrix q =
              springer::intersection_matrix_of_sigma(sig);
          const springer::StepAssignment back = springer::sigma_of_matrix(q, sig.r0, s);
          if (!(springer::chain_of_sigma(back) == ch)) {
            std::ostringstream os;
            os << "n=" << n << " s=" << s << " J=" << join_levels(J)
               << ": matrix round trip failed";
            return os.str();
          }
        }
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_sp_coordinate_round_trips(int n_max, long s_max) {
  for (int n = 1; n <= n_max; ++n)
    for (long s = 1; s <= s_max; s += 2) {
      if (!admissible_sp_pair(n, s)) continue;
      for (int m = 0; m <= n; ++m)
        for (const springer::SpWindowVector& w : springer::enumerate_R_sp(n, s, m)) {
          const springer::SpQVector q = springer::q_coords(w);
          const springer::SpVertex v = springer::psi_sp(q);
          const bool ok = springer::q_coords_inverse(q) == w &&
                          springer::psi_sp_inverse(v) == q &&
                          springer::window_of_vertex(v) == w &&
                          springer::vertex_of_window(w) == v;
          if (!ok) {
            std::ostringstream os;
            os << "n=" << n << " s=" << s << " m=" << m
               << ": symplectic coordinate round trip failed";
            return os.str();
          }
        }
    }
  return std::nullopt;
}

std::optional<std::string> check_sp_pooling_round_trips(int n_max, long s_max) {
  for (int n = 1; n <= n_max; ++n)
    for (long s = 1; s <= s_max; s += 2) {
      if (!admissible_sp_pair(n, s)) continue;
      const long t = (s - 1) / 2;
      for (const springer::Composition& a :
           springer::enumerate_compositions(static_cast<int>(t) + 1, n)) {
        const springer::SpVertex base = springer::eta0_inverse(a);
        if (!(springer::eta(base) == a) || !springer::vertex_markers(base).empty()) {
          std::ostringstream os;
          os << "n=" << n << " s=" << s << ": base arrangement round trip failed";
          return os.str();
        }
        for (int m = 0; m <= n; ++m)
          for (const springer::Composition& c :
               springer::enumerate_compositions(static_cast<int>(t) + 1, m)) {
            bool fits = true;
            for (int k = 0; k <= static_cast<int>(t) && fits; ++k)
              fits = c.parts[static_cast<size_t>(k)] <= a.parts[static_cast<size_t>(k)];
            if (!fits) continue;
            const springer::SpVertex v = springer::tau(a, c);
            if (!(springer::eta(v) == a) ||
                static_cast<int>(springer::vertex_markers(v).size()) != m) {
              std::ostringstream os;
              os << "n=" << n << " s=" << s << " m=" << m
                 << ": fiber pick left its fiber";
              return os.str();
            }
          }
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_sl_oracle(int n_max, long s_max) {
  for (int n = 2; n <= n_max; ++n)
    for (long s = 1; s <= s_max; ++s) {
      if (springer::gcd_long(n, s) != 1) continue;
      for (const std::vector<int>& I : nonempty_subsets(0, n - 1)) {
        const springer::ParahoricTypeA type{n, I};
        const Int formula = springer::euler_sl(n, s, type);
        const Int oracle = springer::euler_sl_oracle(n, s, type);
        if (formula != oracle) {
          std::ostringstream os;
          os << "n=" << n << " s=" << s << " I=" << join_levels(I) << ": formula="
             << formula << " oracle=" << oracle;
          return os.str();
        }
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_sp_oracle(int n_max, long s_max) {
  for (int n = 1; n <= n_max; ++n)
    for (long s = 1; s <= s_max; s += 2) {
      if (!admissible_sp_pair(n, s)) continue;
      for (const std::vector<int>& J : nonempty_subsets(0, n)) {
        const Int formula = springer::euler_sp(n, s, J);
        const Int chains = springer::euler_sp_oracle(n, s, J);
        const Int paths = Int(springer::enumerate_E(n, s, J).size());
        if (formula != chains || formula != paths) {
          std::ostringstream os;
          os << "n=" << n << " s=" << s << " J=" << join_levels(J) << ": formula="
             << formula << " chains=" << chains << " paths=" << paths;
          return os.str();
        }
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_classical_counts(int n_max, long) {
  const int sl_cap = std::min(n_max + 2, 6);
  for (int n = 1; n <= sl_cap; ++n) {
    std::vector<springer::Partition> all;
    springer::Partition work;
    std::function<void(int, int)> gen = [&](int left, int maxpart) {
      if (left == 0) {
        all.push_back(work);
        return;
      }
      for (int p = std::min(left, maxpart); p >= 1; --p) {
        work.push_back(p);
        gen(left - p, p);
        work.pop_back();
      }
    };
    gen(n, n);
    for (const springer::Partition& parts : all) {
      std::vector<int> full;
      for (int j = 1; j <= n - 1; ++j) full.push_back(j);
      const Int count = springer::springer_euler_sl(parts, full);
      std::vector<int> blocks(parts.begin(), parts.end());
      if (count != springer::multinomial(blocks)) {
        std::ostringstream os;
        os << "special linear partition of " << n << ": complete-flag count "
           << count << " != multinomial";
        return os.str();
      }
    }
  }
  const int sp_cap = std::min(n_max, 4);
  for (int n = 1; n <= sp_cap; ++n) {
    for (int n0 = 0; n0 <= n; ++n0) {
      std::vector<springer::Partition> all;
      springer::Partition work;
      std::function<void(int, int)> gen = [&](int left, int maxpart) {
        if (left == 0) {
          all.push_back(work);
          return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
          work.push_back(p);
          gen(left - p, p);
          work.pop_back();
        }
      };
      gen(n - n0, n);
      if (n - n0 == 0) all.push_back({});
      for (const springer::Partition& parts : all) {
        const springer::SymplecticPartition sp{n0, parts};
        std::vector<int> full;
        for (int j = 1; j <= n; ++j) full.push_back(j);
        const Int count = springer::springer_euler_sp(sp, full);
        std::vector<int> blocks = {n0};
        for (int p : parts) blocks.push_back(p);
        const Int expect = springer::multinomial(blocks) * (Int(1) << (n - n0));
        if (count != expect) {
          std::ostringstream os;
          os << "symplectic partition " << n0 << ":" << join_levels(std::vector<int>(
                 parts.begin(), parts.end()))
             << ": complete-flag count " << count << " != " << expect;
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_sl_matrix(int n_max, long s_max) {
  for (int n = 2; n <= n_max; ++n)
    for (long s = 1; s <= s_max; ++s) {
      if (springer::gcd_long(n, s) != 1) continue;
      for (long b = 1; b <= 3; ++b) {
        const springer::LaurentMatrix m = springer::standard_rep_sl(n, s, Rat(b));
        const springer::CharPoly p = springer::char_poly(m);
        bool ok = p.degree() == n && p.c[0] == springer::Laurent::one();
        for (int k = 1; k < n && ok; ++k) ok = p.c[static_cast<size_t>(k)] ==
                                               springer::Laurent::zero();
        ok = ok && p.c[static_cast<size_t>(n)] ==
                       springer::Laurent::monomial(Rat(-b), s);
        ok = ok && springer::verify_almost_commute(m, springer::nu_sl(n, s), s);
        ok = ok && !springer::verify_almost_commute(m, springer::nu_sl(n, s), s + 1);
        if (!ok) {
          std::ostringstream os;
          os << "n=" << n << " s=" << s << " b=" << b
             << ": special linear matrix identity failed";
          return os.str();
        }
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_sp_matrix(int n_max, long s_max) {
  for (int n = 1; n <= std::min(n_max, 4); ++n)
    for (long s = 1; s <= s_max; s += 2) {
      if (!admissible_sp_pair(n, s)) continue;
      for (long b = 1; b <= 3; ++b) {
        const springer::LaurentMatrix m = springer::standard_rep_sp(n, s, Rat(b));
        const springer::CharPoly p = springer::char_poly(m);
        bool ok = springer::verify_symplectic_member(m);
        ok = ok && p.degree() == 2 * n && p.c[0] == springer::Laurent::one();
        for (int k = 1; k < 2 * n && ok; ++k)
          ok = p.c[static_cast<size_t>(k)] == springer::Laurent::zero();
        ok = ok && p.c[static_cast<size_t>(2 * n)] ==
                       springer::Laurent::monomial(Rat(-b), s);
        ok = ok && springer::verify_almost_commute(m, springer::nu_sp(n, s), s);
        ok = ok && springer::eigen_valuations(p) == Rat(s) / Rat(2 * n);
        if (!ok) {
          std::ostringstream os;
          os << "n=" << n << " s=" << s << " b=" << b
             << ": symplectic matrix identity failed";
          return os.str();
        }
      }
    }
  return std::nullopt;
}

const std::vector<Check> kChecks = {
    {"bijections", "window first differences invert (special linear)",
     check_sl_window_round_trip},
    {"bijections", "chains, step functions, and matrices invert (special linear)",
     check_sl_chain_round_trips},
    {"bijections", "window coordinates and arrangements invert (symplectic)",
     check_sp_coordinate_round_trips},
    {"bijections", "pooling and fiber picks invert (symplectic)",
     check_sp_pooling_round_trips},
    {"oracles", "closed count equals chain enumeration (special linear)",
     check_sl_oracle},
    {"oracles", "closed count equals path and chain enumeration (symplectic)",
     check_sp_oracle},
    {"oracles", "complete-flag counts equal their closed forms", check_classical_counts},
    {"matrix", "characteristic polynomial and grading (special linear)",
     check_sl_matrix},
    {"matrix", "membership, squared characteristic polynomial, grading (symplectic)",
     check_sp_matrix},
};

int run_verify(const std::string& suite, int n_max, long s_max) {
  for (const Check& check : kChecks) {
    if (suite != "all" && suite != check.suite) continue;
    const std::optional<std::string> fail = check.run(n_max, s_max);
    if (fail) {
      std::cout << "FAIL: " << check.name << ": " << *fail << '\n';
      return 1;
    }
    std::cout << "ok: " << check.name << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Table generation.

struct CellSpec {
  std::string family;
  int n = 0;
  long s = 0;
  std::vector<int> type;
};

TableRow compute_cell(const CellSpec& cell, bool oracle) {
  TableRow row;
  row.family = cell.family;
  row.n = cell.n;
  row.s = cell.s;
  row.type = cell.type;
  if (cell.family == "sl") {
    const springer::ParahoricTypeA type{cell.n, cell.type};
    row.chi_formula = springer::euler_sl(cell.n, cell.s, type);
    if (oracle) row.chi_oracle = springer::euler_sl_oracle(cell.n, cell.s, type);
  } else {
    row.chi_formula = springer::euler_sp(cell.n, cell.s, cell.type);
    if (oracle) row.chi_oracle = springer::euler_sp_oracle(cell.n, cell.s, cell.type);
  }
  return row;
}

int run_table(const std::string& family, int n_max, long s_max, bool oracle,
              const std::string& format, const std::string& out_path, int jobs) {
  std::vector<CellSpec> cells;
  if (family == "sl" || family == "both")
    for (int n = 2; n <= n_max; ++n)
      for (long s = 1; s <= s_max; ++s) {
        if (springer::gcd_long(n, s) != 1) continue;
        std::vector<std::vector<int>> types = nonempty_subsets(0, n - 1);
        std::sort(types.begin(), types.end());
        for (const std::vector<int>& I : types) cells.push_back({"sl", n, s, I});
      }
  if (family == "sp" || family == "both")
    for (int n = 1; n <= n_max; ++n)
      for (long s = 1; s <= s_max; s += 2) {
        if (springer::gcd_long(n, s) != 1) continue;
        std::vector<std::vector<int>> types = nonempty_subsets(0, n);
        std::sort(types.begin(), types.end());
        for (const std::vector<int>& J : types) cells.push_back({"sp", n, s, J});
      }

  std::vector<TableRow> rows(cells.size());
  std::atomic<size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  const int workers = std::max(1, jobs);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        try {
          rows[i] = compute_cell(cells[i], oracle);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  std::ostringstream body;
  if (format == "csv") {
    body << kCsvHeader << '\n';
    for (const TableRow& row : rows) body << csv_line(row) << '\n';
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) arr.push_back(json_row(row));
    body << arr.dump(2) << '\n';
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + out_path);
    out << body.str();
    if (!out) throw std::ios_base::failure("write failed: " + out_path);
  }
  for (const TableRow& row : rows)
    if (row.chi_oracle && !row.match()) {
      std::cerr << "mismatch at " << row.family << " n=" << row.n << " s=" << row.s
                << " type=" << join_levels(row.type) << '\n';
      return 1;
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler characteristics of affine Springer fibers"};
  app.require_subcommand(1);

  std::string family, type_text, partition_text, suite, format = "csv", out_path;
  int n = 0, n_max = 4, jobs = 1;
  long s = 0, s_flag = 0, s_max = 5;
  bool oracle = false;

  CLI::App* euler = app.add_subcommand("euler", "Euler characteristic of one fixed-point variety");
  euler->add_option("family", family, "sl or sp")->required()->check(CLI::IsMember({"sl", "sp"}));
  euler->add_option("n", n, "rank parameter")->required();
  euler->add_option("s", s, "width parameter")->required();
  euler->add_option("type", type_text, "comma-separated levels, full, or max:i")->required();
  euler->add_flag("--oracle", oracle, "also run the brute-force enumeration");

  CLI::App* spr = app.add_subcommand("springer", "classical fiber count for a nilpotent of given Jordan type");
  spr->add_option("family", family, "sl or sp")->required()->check(CLI::IsMember({"sl", "sp"}));
  spr->add_option("partition", partition_text,
                  "sl: comma-separated parts; sp: n0:part,part,...")->required();
  spr->add_option("type", type_text, "comma-separated flag levels or full")->required();
  spr->add_option("--s", s_flag, "width override (default: smallest admissible)");
  spr->add_flag("--oracle", oracle, "also evaluate at the next admissible width");

  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("suite", suite, "bijections, oracles, matrix, or all")
      ->required()
      ->check(CLI::IsMember({"bijections", "oracles", "matrix", "all"}));
  verify->add_option("--n-max", n_max, "largest rank to sweep");
  verify->add_option("--s-max", s_max, "largest width to sweep");

  CLI::App* table = app.add_subcommand("table", "emit a parameter-sweep table");
  table->add_option("--family", family, "sl, sp, or both")
      ->default_val("both")
      ->check(CLI::IsMember({"sl", "sp", "both"}));
  table->add_option("--n-max", n_max, "largest rank to sweep");
  table->add_option("--s-max", s_max, "largest width to sweep");
  table->add_flag("--oracle", oracle, "fill the oracle column");
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "output path (default: standard output)");
  table->add_option("--jobs", jobs, "worker threads for independent cells")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (euler->parsed()) return run_euler(family, n, s, type_text, oracle);
    if (spr->parsed()) return run_springer(family, partition_text, type_text, s_flag, oracle);
    if (verify->parsed()) return run_verify(suite, n_max, s_max);
    return run_table(family, n_max, s_max, oracle, format, out_path, jobs);
  } catch (const springer::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
