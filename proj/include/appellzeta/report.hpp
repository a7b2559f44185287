#pragma once

// Rendering of verification reports: a fixed-shape text line for terminals
// and a JSON record line for machine consumers.

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "appellzeta/cases.hpp"
#include "appellzeta/complexmp.hpp"

namespace appellzeta {

inline std::string format_tolerance(double tol) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(1) << tol;
  return os.str();
}

inline std::string report_text_line(const VerificationReport& r) {
  std::string out = r.pass ? "[PASS] " : "[FAIL] ";
  out += r.case_id;
  out += " prec=" + std::to_string(r.precision);
  out += " tol=" + format_tolerance(r.tolerance);
  if (r.converged) {
    out += " rel_err=" + format_real(r.rel_err, 3);
    out += " abs_err=" + format_real(r.abs_err, 3);
    if (r.used_abs_compare) out += " (absolute comparison)";
    out += " diagonals=" + std::to_string(r.diagonals_used);
  } else {
    out += " not-converged diagonals=" + std::to_string(r.diagonals_used);
  }
  out += "  [" + r.params_text + "]";
  if (!r.note.empty()) out += "  note: " + r.note;
  return out;
}

inline std::string report_json_line(const VerificationReport& r) {
  nlohmann::json j;
  j["id"] = r.case_id;
  j["params"] = r.params_text;
  j["prec"] = r.precision;
  j["tolerance"] = r.tolerance;
  j["converged"] = r.converged;
  j["pass"] = r.pass;
  j["diagonals_used"] = r.diagonals_used;
  j["compare"] = r.used_abs_compare ? "absolute" : "relative";
  if (r.converged) {
    // Digits of a non-converged partial sum would not be trustworthy, so the
    // numeric fields are null unless the stopping rule certified the value.
    j["lhs"] = format_complex(r.lhs, r.precision);
    j["abs_err"] = format_real(r.abs_err, 6);
    j["rel_err"] = format_real(r.rel_err, 6);
  } else {
    j["lhs"] = nullptr;
    j["abs_err"] = nullptr;
    j["rel_err"] = nullptr;
  }
  j["rhs"] = format_complex(r.rhs, r.precision);
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

}  // namespace appellzeta
