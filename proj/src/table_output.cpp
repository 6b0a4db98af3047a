#include <cstdio>
#include <iomanip>
#include <string>

#include <json.hpp>

#include "bclass/dtransform.hpp"
#include "table_json.hpp"

namespace bclass {

namespace {

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string d_notation(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2E", v);
  std::string s(buf);
  if (auto e = s.find('E'); e != std::string::npos) s[e] = 'D';
  return s;
}

void write_csv(const ExtrapolationTable& table, std::ostream& out) {
  const bool errors = table.reference.has_value();
  out << (errors ? "nu,F_error,D_error,residual\n" : "nu,F,D,residual\n");
  for (const auto& e : table.entries) {
    out << e.nu << ',';
    if (errors)
      out << full(*e.F_error) << ',' << full(*e.D_error);
    else
      out << full(e.F) << ',' << full(e.D);
    out << ',' << full(e.residual) << '\n';
  }
}

nlohmann::json detail::table_to_json(const ExtrapolationTable& table) {
  nlohmann::json doc;
  doc["integrand"] = table.integrand;
  doc["grid"] = table.grid;
  doc["m"] = table.m;
  doc["exponents"] = table.exponents;
  doc["reference"] = table.reference ? nlohmann::json(*table.reference) : nlohmann::json(nullptr);
  auto& entries = doc["entries"] = nlohmann::json::array();
  for (const auto& e : table.entries) {
    nlohmann::json rec{{"nu", e.nu}, {"F", e.F}, {"D", e.D}, {"residual", e.residual}, {"reliable", e.reliable}};
    if (e.F_error) {
      rec["F_error"] = *e.F_error;
      rec["D_error"] = *e.D_error;
      rec["F_error_sci"] = d_notation(*e.F_error);
      rec["D_error_sci"] = d_notation(*e.D_error);
    }
    entries.push_back(std::move(rec));
  }
  return doc;
}

void write_json(const ExtrapolationTable& table, std::ostream& out) {
  out << detail::table_to_json(table).dump(2) << '\n';
}

void write_pretty(const ExtrapolationTable& table, std::ostream& out) {
  out << "integrand: " << table.integrand << "\ngrid:      " << table.grid << "\nm:         " << table.m
      << "\n\n";
  if (table.reference) {
    out << std::setw(4) << "nu" << "  " << std::setw(12) << "|F - I|" << "  " << std::setw(12) << "|D - I|"
        << "  " << std::setw(12) << "residual" << '\n';
    for (const auto& e : table.entries)
      out << std::setw(4) << e.nu << "  " << std::setw(12) << d_notation(*e.F_error) << "  " << std::setw(12)
          << d_notation(*e.D_error) << "  " << std::setw(12) << d_notation(e.residual) << (e.reliable ? "" : "  *")
          << '\n';
  } else {
    out << std::setw(4) << "nu" << "  " << std::setw(24) << "F" << "  " << std::setw(24) << "D" << "  "
        << std::setw(12) << "residual" << '\n';
    for (const auto& e : table.entries)
      out << std::setw(4) << e.nu << "  " << std::setw(24) << full(e.F) << "  " << std::setw(24) << full(e.D)
          << "  " << std::setw(12) << d_notation(e.residual) << (e.reliable ? "" : "  *") << '\n';
  }
  bool any_flag = false;
  for (const auto& e : table.entries) any_flag = any_flag || !e.reliable;
  if (any_flag) out << "\n* residual above tolerance; entry unreliable\n";
}

}  // namespace bclass
