#include "measkit/measkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "measkit/tasks.hpp"
#include "measkit/xreal.hpp"

using measkit::Error;
using measkit::ErrorCode;

struct mk_context {
  measkit::TaskOptions options;
  std::string last_error;
};

struct mk_result {
  measkit::TaskOutput output;
};

namespace {

mk_status to_status(ErrorCode code) { return static_cast<mk_status>(static_cast<int>(code) + 1); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int parse_int(const char* value) {
  std::string s(value);
  std::size_t used = 0;
  int n = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return n;
}

template <class F>
mk_status guarded(mk_context* ctx, F&& body) {
  try {
    body();
    if (ctx) ctx->last_error.clear();
    return MK_OK;
  } catch (const Error& e) {
    if (ctx) ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    if (ctx) ctx->last_error = "out of memory";
    return MK_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return MK_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* mk_version(void) { return "1.0.0"; }

const char* mk_status_name(mk_status status) {
  static const char* const names[] = {
      "Ok",
      "UndefinedSum",
      "UnsupportedExponent",
      "NegativeTerm",
      "EmptyGenerators",
      "PreconditionFailed",
      "MalformedBound",
      "NotACover",
      "NotMeasurable",
      "UnsupportedFactorKinds",
      "HypothesisFailed",
      "SpaceMismatch",
      "NegativeValue",
      "NegativeFunction",
      "IncompatibleSpace",
      "NotIntegrable",
      "NonDiffuseMeasure",
      "NotAbsolutelySummable",
      "NotAlmostSummable",
      "ZeroMeasure",
      "UnboundedFunction",
      "AnchorOutOfSpace",
      "UnsupportedShape",
      "ParseError",
      "InvalidArgument",
      "InternalError",
  };
  int i = static_cast<int>(status);
  if (i < 0 || i >= static_cast<int>(sizeof names / sizeof names[0])) return "Unknown";
  return names[i];
}

mk_context* mk_context_new(void) { return new (std::nothrow) mk_context(); }

void mk_context_free(mk_context* ctx) { delete ctx; }

mk_status mk_context_set_option(mk_context* ctx, const char* key, const char* value) {
  if (!ctx || !key || !value) return MK_INVALID_ARGUMENT;
  std::string k(key);
  mk_status s = guarded(ctx, [&] {
    if (k == "n_max") ctx->options.n_max = parse_int(value);
    else if (k == "tol") ctx->options.tol = measkit::parse_rational(value);
    else if (k == "size") ctx->options.size = parse_int(value);
    else if (k == "decimal") ctx->options.decimal = parse_int(value);
    else if (k == "suite") ctx->options.suite = value;
    else measkit::fail(ErrorCode::ParseError, "unknown option \"" + k + "\"");
  });
  if (s == MK_INTERNAL_ERROR) {
    ctx->last_error = "option \"" + k + "\" expects an integer, got \"" + value + "\"";
    return MK_PARSE_ERROR;
  }
  return s;
}

const char* mk_context_last_error(const mk_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

mk_status mk_run(mk_context* ctx, const char* command, const char* input, mk_result** out) {
  if (!ctx || !command || !out) return MK_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] {
    auto* r = new mk_result();
    r->output = measkit::run_task(command, input ? input : "", ctx->options);
    *out = r;
  });
}

int mk_result_exit_code(const mk_result* r) { return r ? r->output.exit_code : 3; }
const char* mk_result_text(const mk_result* r) { return r ? r->output.text.c_str() : ""; }
const char* mk_result_json(const mk_result* r) { return r ? r->output.json.c_str() : ""; }
const char* mk_result_diagnostic(const mk_result* r) { return r ? r->output.diagnostic.c_str() : ""; }
void mk_result_free(mk_result* r) { delete r; }

mk_status mk_xreal_normalize(const char* text, char** out) {
  if (!text || !out) return MK_INVALID_ARGUMENT;
  return guarded(nullptr, [&] { *out = copy_string(measkit::XReal::parse(text).to_string()); });
}

mk_status mk_xreal_apply(const char* op, const char* a, const char* b, char** out) {
  if (!op || !a || !b || !out) return MK_INVALID_ARGUMENT;
  std::string o(op);
  if (o != "+" && o != "-" && o != "*" && o != "/") return MK_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    measkit::XReal x = measkit::XReal::parse(a);
    measkit::XReal y = measkit::XReal::parse(b);
    measkit::XReal z = o == "+"   ? x + y
                       : o == "-" ? x - y
                       : o == "*" ? x * y
                                  : measkit::div_nonneg_mt(x, y);
    *out = copy_string(z.to_string());
  });
}

void mk_string_free(char* s) { std::free(s); }

}  // extern "C"
