#include "snc/snc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "snc/delta_complex.hpp"
#include "snc/error.hpp"
#include "snc/fixtures.hpp"
#include "snc/json_io.hpp"
#include "snc/stairs.hpp"
#include "snc/corank_report.hpp"
#include "snc/weight_ss.hpp"

struct snc_fan {
  snc::FanSystem value;
};

struct snc_strata {
  snc::StrataComplex value;
};

namespace {

thread_local std::string last_error;

snc_status status_of(snc::ErrorCode code) {
  return static_cast<snc_status>(static_cast<int>(code));
}

template <class F>
snc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SNC_OK;
  } catch (const snc::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SNC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SNC_ERR_INTERNAL;
  }
}

snc_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SNC_ERR_NULL_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

snc_fan* wrap(snc::FanSystem fs) { return new snc_fan{std::move(fs)}; }

snc::FanSystem hilbert(std::size_t length, std::size_t power) {
  return snc::hilbert_cusp_window(snc::IntMatrix::from_rows<int>({{2, 1}, {1, 1}}), length == 0 ? 3 : length, power);
}

}  // namespace

#define SNC_REQUIRE(p) \
  if (!(p)) return null_arg(#p)

extern "C" {

const char* snc_version(void) { return "1.0.0"; }

const char* snc_status_name(snc_status status) {
  switch (status) {
    case SNC_OK: return "OK";
    case SNC_ERR_NULL_ARGUMENT: return "NullArgument";
    case SNC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= SNC_ERR_INVALID_INPUT && status <= SNC_ERR_INVALID_PARAMS)
    return snc::to_string(static_cast<snc::ErrorCode>(status)).data();
  return "Unknown";
}

const char* snc_last_error(void) { return last_error.c_str(); }

void snc_string_free(char* s) { std::free(s); }

snc_status snc_fan_from_json(const char* json, snc_fan** out) {
  SNC_REQUIRE(json);
  SNC_REQUIRE(out);
  return guarded([&] { *out = wrap(snc::fan_system_from_json(snc::parse_json(json))); });
}

snc_status snc_fan_hilbert(const long long m[4], size_t length, size_t power, snc_fan** out) {
  SNC_REQUIRE(m);
  SNC_REQUIRE(out);
  return guarded([&] {
    snc::IntMatrix mat(2, 2, {m[0], m[1], m[2], m[3]});
    *out = wrap(snc::hilbert_cusp_window(mat, length, power));
  });
}

void snc_fan_free(snc_fan* fan) { delete fan; }

snc_status snc_fan_to_json(const snc_fan* fan, char** out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(out);
  return guarded([&] { *out = copy_out(snc::dump(snc::to_json(fan->value))); });
}

snc_status snc_fan_cone_count(const snc_fan* fan, size_t* out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(out);
  return guarded([&] { *out = fan->value.maximal_cones().size(); });
}

snc_status snc_fan_cusp_count(const snc_fan* fan, size_t* out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(out);
  *out = fan->value.cusps().size();
  return SNC_OK;
}

const char* snc_fan_cusp_name(const snc_fan* fan, size_t index) {
  if (!fan || index >= fan->value.cusps().size()) return nullptr;
  return fan->value.cusps()[index].name.c_str();
}

snc_status snc_fan_check_snc(const snc_fan* fan, int* ok, char** report) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(ok);
  return guarded([&] {
    const auto r = snc::check_snc_condition(fan->value);
    *ok = r.ok ? 1 : 0;
    if (report) *report = copy_out(snc::dump(snc::to_json(r, fan->value)));
  });
}

snc_status snc_fan_all_smooth(const snc_fan* fan, int* out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(out);
  return guarded([&] {
    *out = 1;
    for (const auto& c : fan->value.cones())
      if (!snc::is_smooth(c)) *out = 0;
  });
}

snc_status snc_fan_two_division(const snc_fan* fan, snc_fan** out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(out);
  return guarded([&] { *out = wrap(snc::two_division_subdivide(fan->value)); });
}

snc_status snc_fan_smooth(const snc_fan* fan, snc_fan** out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(out);
  return guarded([&] { *out = wrap(snc::smooth_subdivide(fan->value)); });
}

snc_status snc_fan_subdivide(const snc_fan* fan, snc_fan** out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(out);
  return guarded([&] { *out = wrap(snc::smooth_subdivide(snc::two_division_subdivide(fan->value))); });
}

snc_status snc_fan_homology(const snc_fan* fan, const char* cusp, char** out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(cusp);
  SNC_REQUIRE(out);
  return guarded([&] {
    const auto index = fan->value.cusp_index(cusp);
    if (!index) snc::fail(snc::ErrorCode::InvalidInput, std::string("unknown cusp '") + cusp + "'");
    const auto dc = snc::quotient_delta_complex(fan->value, *index);
    snc::Json j{{"cusp", cusp}, {"complex", snc::to_json(dc)}, {"homology", snc::to_json(snc::pseudomanifold_report(dc))}};
    *out = copy_out(snc::dump(j));
  });
}

snc_status snc_strata_from_json(const char* json, snc_strata** out) {
  SNC_REQUIRE(json);
  SNC_REQUIRE(out);
  return guarded([&] { *out = new snc_strata{snc::strata_complex_from_json(snc::parse_json(json))}; });
}

snc_status snc_strata_from_fan(const snc_fan* fan, const char* annotation_json, snc_strata** out) {
  SNC_REQUIRE(fan);
  SNC_REQUIRE(annotation_json);
  SNC_REQUIRE(out);
  return guarded([&] {
    const auto ann = snc::cusp_annotation_from_json(snc::parse_json(annotation_json));
    *out = new snc_strata{snc::annotate_from_fans(fan->value, ann)};
  });
}

void snc_strata_free(snc_strata* strata) { delete strata; }

snc_status snc_strata_to_json(const snc_strata* strata, char** out) {
  SNC_REQUIRE(strata);
  SNC_REQUIRE(out);
  return guarded([&] { *out = copy_out(snc::dump(snc::to_json(strata->value))); });
}

snc_status snc_strata_spectral(const snc_strata* strata, int k, char** out) {
  SNC_REQUIRE(strata);
  SNC_REQUIRE(out);
  return guarded([&] {
    const auto page = snc::d1(strata->value, snc::e1_page(strata->value, k));
    snc::Json j{{"e1", snc::to_json(page)}, {"e2", snc::to_json(snc::e2_page(page))}};
    *out = copy_out(snc::dump(j));
  });
}

snc_status snc_strata_fn_filtration(const snc_strata* strata, char** out) {
  SNC_REQUIRE(strata);
  SNC_REQUIRE(out);
  return guarded([&] { *out = copy_out(snc::dump(snc::to_json(snc::weight_filtration_on_FnHn(strata->value)))); });
}

snc_status snc_stairs(const char* preset, int k, snc_format format, char** out) {
  SNC_REQUIRE(preset);
  SNC_REQUIRE(out);
  return guarded([&] {
    const auto rg = snc::admissible_region(snc::preset(preset), k);
    switch (format) {
      case SNC_FORMAT_JSON: *out = copy_out(snc::dump(snc::to_json(rg))); break;
      case SNC_FORMAT_ASCII: *out = copy_out(snc::render_region(rg, snc::RenderFormat::Ascii)); break;
      case SNC_FORMAT_SVG: *out = copy_out(snc::render_region(rg, snc::RenderFormat::Svg)); break;
      default: snc::fail(snc::ErrorCode::InvalidParams, "unknown output format");
    }
  });
}

snc_status snc_stairs_count(const char* preset, int k, size_t* out) {
  SNC_REQUIRE(preset);
  SNC_REQUIRE(out);
  return guarded([&] { *out = snc::admissible_region(snc::preset(preset), k).admissible.size(); });
}

snc_status snc_report(const char* preset, const char* inventory_json, int* consistent, char** out) {
  SNC_REQUIRE(preset);
  SNC_REQUIRE(inventory_json);
  return guarded([&] {
    const auto rep = snc::corank_report(snc::preset(preset), snc::cusp_inventory_from_json(snc::parse_json(inventory_json)));
    if (consistent) *consistent = rep.consistent() ? 1 : 0;
    if (out) *out = copy_out(snc::dump(snc::to_json(rep)));
  });
}

size_t snc_fixture_count(void) { return snc::fixture_names().size(); }

const char* snc_fixture_name(size_t index) {
  static const std::vector<std::string> names = snc::fixture_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

snc_status snc_fixture_json(const char* name, size_t length, char** out) {
  SNC_REQUIRE(name);
  SNC_REQUIRE(out);
  return guarded([&] {
    const std::string n = name;
    snc::Json j;
    if (n == "hilbert") j = snc::to_json(hilbert(length, 1));
    else if (n == "hilbert-m3") j = snc::to_json(hilbert(length, 3));
    else if (n == "cstar") j = snc::to_json(snc::cstar_fixture());
    else if (n == "p1xp1") j = snc::to_json(snc::p1xp1_fixture());
    else snc::fail(snc::ErrorCode::InvalidParams, "unknown fixture '" + n + "'");
    *out = copy_out(snc::dump(j));
  });
}

}  // extern "C"
