// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snc/snc.h"

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kInputError = 2;

struct InputError {
  std::string message;
};

struct Owned {
  char* text = nullptr;
  ~Owned() { snc_string_free(text); }
};

struct FanDeleter {
  void operator()(snc_fan* f) const { snc_fan_free(f); }
};
struct StrataDeleter {
  void operator()(snc_strata* s) const { snc_strata_free(s); }
};
using FanPtr = std::unique_ptr<snc_fan, FanDeleter>;
using StrataPtr = std::unique_ptr<snc_strata, StrataDeleter>;

int exit_code_of(snc_status st) { return st == SNC_ERR_SNC_CONDITION_VIOLATED ? kValidationFailure : kInputError; }

struct StatusError {
  snc_status status;
  std::string message;
};

void check(snc_status st) {
  if (st != SNC_OK) throw StatusError{st, std::string(snc_status_name(st)) + ": " + snc_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError{"cannot write '" + out_path + "'"};
  out << text;
}

FanPtr load_fan(const std::string& path) {
  const std::string text = read_file(path);
  snc_fan* f = nullptr;
  check(snc_fan_from_json(text.c_str(), &f));
  return FanPtr(f);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Strata from a strata-complex file, or from a fan file when cusp dimensions are given.
StrataPtr load_strata(const std::string& path, const std::vector<std::string>& cusp_dims, int n) {
  snc_strata* s = nullptr;
  if (cusp_dims.empty()) {
    check(snc_strata_from_json(read_file(path).c_str(), &s));
    return StrataPtr(s);
  }
  std::string ann = "{";
  if (n >= 0) ann += "\"n\": " + std::to_string(n) + ", ";
  ann += "\"cusps\": [";
  for (std::size_t i = 0; i < cusp_dims.size(); ++i) {
    const auto eq = cusp_dims[i].find('=');
    if (eq == std::string::npos) throw InputError{"--cusp-dim expects NAME=D, got '" + cusp_dims[i] + "'"};
    const std::string d = cusp_dims[i].substr(eq + 1);
    if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
      throw InputError{"--cusp-dim dimension must be a nonnegative integer, got '" + d + "'"};
    if (i) ann += ", ";
    ann += "{\"cusp\": " + json_string(cusp_dims[i].substr(0, eq)) + ", \"d\": " + d + "}";
  }
  ann += "]}";
  FanPtr fan = load_fan(path);
  check(snc_strata_from_fan(fan.get(), ann.c_str(), &s));
  return StrataPtr(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fans, quotient complexes, weight spectral sequences and Hodge stairs"};
  app.set_version_flag("--version", std::string("snctool ") + snc_version());
  app.require_subcommand(1);

  std::string input, out_path, cusp, preset, format = "json", inventory, fixture, only;
  std::vector<std::string> cusp_dims;
  int k = 0, n = -1;
  std::size_t length = 3;

  auto* check_snc = app.add_subcommand("check-snc", "Report cones with two equivalent rays (exit 1 if any)");
  check_snc->add_option("fan", input, "Fan-system JSON")->required()->check(CLI::ExistingFile);

  auto* subdivide = app.add_subcommand("subdivide", "Two-division followed by smoothing");
  subdivide->add_option("fan", input, "Fan-system JSON")->required()->check(CLI::ExistingFile);
  subdivide->add_option("-o,--output", out_path, "Output path (default stdout)");
  subdivide->add_option("--only", only, "Run a single step")->check(CLI::IsMember({"two-division", "smooth"}));

  auto* homology = app.add_subcommand("homology", "Quotient complex and its homology for one cusp");
  homology->add_option("fan", input, "Fan-system JSON")->required()->check(CLI::ExistingFile);
  homology->add_option("--cusp", cusp, "Cusp name (default: the first cusp)");
  homology->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* spectral = app.add_subcommand("spectral", "E1 page with d1 and the weight-graded H^k");
  spectral->add_option("file", input, "Strata-complex JSON, or fan-system JSON with --cusp-dim")->required()->check(CLI::ExistingFile);
  spectral->add_option("--k", k, "Cohomological degree")->required();
  spectral->add_option("--cusp-dim", cusp_dims, "NAME=D: build the strata from the fan with dimension D over NAME");
  spectral->add_option("--n", n, "Ambient dimension for --cusp-dim (default: largest cusp rank)");
  spectral->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* fn = app.add_subcommand("fn-filtration", "Weight filtration on F^n H^n and the residue maps");
  fn->add_option("file", input, "Strata-complex JSON, or fan-system JSON with --cusp-dim")->required()->check(CLI::ExistingFile);
  fn->add_option("--cusp-dim", cusp_dims, "NAME=D: build the strata from the fan with dimension D over NAME");
  fn->add_option("--n", n, "Ambient dimension for --cusp-dim (default: largest cusp rank)");
  fn->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* stairs = app.add_subcommand("stairs", "Region where h^{p,q} of H^k is not excluded");
  stairs->add_option("--preset", preset, "sp:G, o2n:N or u:P,Q")->required();
  stairs->add_option("--k", k, "Cohomological degree")->required()->check(CLI::NonNegativeNumber);
  stairs->add_option("--format", format, "json, ascii or svg")->check(CLI::IsMember({"json", "ascii", "svg"}));
  stairs->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* report = app.add_subcommand("report", "Corank dimension identities for a cusp inventory (exit 1 if inconsistent)");
  report->add_option("--inventory", inventory, "Inventory JSON")->required()->check(CLI::ExistingFile);
  report->add_option("--preset", preset, "sp:G, o2n:N or u:P,Q")->required();
  report->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* fixtures = app.add_subcommand("fixtures", "Emit a built-in fixture as JSON, or list them");
  fixtures->add_option("name", fixture, "Fixture name");
  fixtures->add_option("--length", length, "Hilbert window length")->check(CLI::PositiveNumber);
  fixtures->add_option("-o,--output", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*check_snc) {
      FanPtr fan = load_fan(input);
      int ok = 0;
      Owned text;
      check(snc_fan_check_snc(fan.get(), &ok, &text.text));
      emit(text.text, "");
      return ok ? kOk : kValidationFailure;
    }
    if (*subdivide) {
      FanPtr fan = load_fan(input);
      snc_fan* result = nullptr;
      if (only == "two-division") check(snc_fan_two_division(fan.get(), &result));
      else if (only == "smooth") check(snc_fan_smooth(fan.get(), &result));
      else check(snc_fan_subdivide(fan.get(), &result));
      FanPtr out(result);
      Owned text;
      check(snc_fan_to_json(out.get(), &text.text));
      emit(text.text, out_path);
      return kOk;
    }
    if (*homology) {
      FanPtr fan = load_fan(input);
      if (cusp.empty()) {
        const char* first = snc_fan_cusp_name(fan.get(), 0);
        if (!first) throw InputError{"the fan system has no cusps"};
        cusp = first;
      }
      Owned text;
      check(snc_fan_homology(fan.get(), cusp.c_str(), &text.text));
      emit(text.text, out_path);
      return kOk;
    }
    if (*spectral) {
      StrataPtr sc = load_strata(input, cusp_dims, n);
      Owned text;
      check(snc_strata_spectral(sc.get(), k, &text.text));
      emit(text.text, out_path);
      return kOk;
    }
    if (*fn) {
      StrataPtr sc = load_strata(input, cusp_dims, n);
      Owned text;
      check(snc_strata_fn_filtration(sc.get(), &text.text));
      emit(text.text, out_path);
      return kOk;
    }
    if (*stairs) {
      const snc_format f = format == "svg" ? SNC_FORMAT_SVG : format == "ascii" ? SNC_FORMAT_ASCII : SNC_FORMAT_JSON;
      Owned text;
      check(snc_stairs(preset.c_str(), k, f, &text.text));
      emit(text.text, out_path);
      return kOk;
    }
    if (*report) {
      const std::string inv = read_file(inventory);
      int consistent = 0;
      Owned text;
      check(snc_report(preset.c_str(), inv.c_str(), &consistent, &text.text));
      emit(text.text, out_path);
      return consistent ? kOk : kValidationFailure;
    }
    if (*fixtures) {
      if (fixture.empty()) {
        std::string list;
        for (std::size_t i = 0; i < snc_fixture_count(); ++i) list += std::string(snc_fixture_name(i)) + "\n";
        emit(list, out_path);
        return kOk;
      }
      Owned text;
      check(snc_fixture_json(fixture.c_str(), length, &text.text));
      emit(text.text, out_path);
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const StatusError& e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_code_of(e.status);
  }
  return kInputError;
}
