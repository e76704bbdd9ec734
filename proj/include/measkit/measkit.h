#ifndef MEASKIT_H
#define MEASKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(MEASKIT_BUILDING_C_API)
#define MK_API __attribute__((visibility("default")))
#else
#define MK_API
#endif

typedef enum mk_status {
  MK_OK = 0,
  MK_UNDEFINED_SUM,
  MK_UNSUPPORTED_EXPONENT,
  MK_NEGATIVE_TERM,
  MK_EMPTY_GENERATORS,
  MK_PRECONDITION_FAILED,
  MK_MALFORMED_BOUND,
  MK_NOT_A_COVER,
  MK_NOT_MEASURABLE,
  MK_UNSUPPORTED_FACTOR_KINDS,
  MK_HYPOTHESIS_FAILED,
  MK_SPACE_MISMATCH,
  MK_NEGATIVE_VALUE,
  MK_NEGATIVE_FUNCTION,
  MK_INCOMPATIBLE_SPACE,
  MK_NOT_INTEGRABLE,
  MK_NON_DIFFUSE_MEASURE,
  MK_NOT_ABSOLUTELY_SUMMABLE,
  MK_NOT_ALMOST_SUMMABLE,
  MK_ZERO_MEASURE,
  MK_UNBOUNDED_FUNCTION,
  MK_ANCHOR_OUT_OF_SPACE,
  MK_UNSUPPORTED_SHAPE,
  MK_PARSE_ERROR,
  MK_INVALID_ARGUMENT,
  MK_INTERNAL_ERROR
} mk_status;

typedef struct mk_context mk_context;
typedef struct mk_result mk_result;

MK_API const char* mk_version(void);
MK_API const char* mk_status_name(mk_status status);

MK_API mk_context* mk_context_new(void);
MK_API void mk_context_free(mk_context* ctx);

/* Options: "n_max", "tol", "size", "decimal", "suite". Values use the same
   text as the command-line flags. */
MK_API mk_status mk_context_set_option(mk_context* ctx, const char* key, const char* value);

/* Last error message recorded on the context, or "" when none. */
MK_API const char* mk_context_last_error(const mk_context* ctx);

/* Runs a command on a JSON input document (ignored by "verify"). On MK_OK
   *out receives a result, even when the command itself reports failure
   through its exit code. */
MK_API mk_status mk_run(mk_context* ctx, const char* command, const char* input, mk_result** out);

MK_API int mk_result_exit_code(const mk_result* r);
MK_API const char* mk_result_text(const mk_result* r);
MK_API const char* mk_result_json(const mk_result* r);
MK_API const char* mk_result_diagnostic(const mk_result* r);
MK_API void mk_result_free(mk_result* r);

/* Normalizes an extended real ("p/q", "inf", "-inf") into *out, which the
   caller releases with mk_string_free. */
MK_API mk_status mk_xreal_normalize(const char* text, char** out);
/* Binary operations on extended reals: op is one of "+", "-", "*", "/". */
MK_API mk_status mk_xreal_apply(const char* op, const char* a, const char* b, char** out);
MK_API void mk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
