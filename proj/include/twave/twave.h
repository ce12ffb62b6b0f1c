#ifndef TWAVE_TWAVE_H
#define TWAVE_TWAVE_H

/* C interface to the traveling-wave library.
 *
 * Every call returns a tw_status; on failure tw_last_error() holds a message
 * for the calling thread. Strings returned through char** are owned by the
 * caller and released with tw_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TW_API __declspec(dllexport)
#else
#define TW_API __attribute__((visibility("default")))
#endif

typedef enum tw_status {
  TW_OK = 0,
  TW_E_INVALID_ARGUMENT = 1,
  TW_E_DOMAIN = 2,
  TW_E_POLE_PROXIMITY = 3,
  TW_E_FRAME_DEGENERATE = 4,
  TW_E_UNSUPPORTED_FAMILY = 5,
  TW_E_CASE_MISMATCH = 6,
  TW_E_SIGN_DOMAIN = 7,
  TW_E_EMPTY_GRID = 8,
  TW_E_STEP_UNDERFLOW = 9,
  TW_E_IO = 10,
  TW_E_INTERNAL = 99
} tw_status;

typedef enum tw_branch { TW_BRANCH_PLUS = 0, TW_BRANCH_MINUS = 1 } tw_branch;

typedef struct tw_equation {
  double alpha, beta, a, b;
} tw_equation;

typedef struct tw_frame {
  double lambda, k, omega, xi0;
} tw_frame;

typedef struct tw_solution tw_solution;

TW_API const char* tw_version(void);
TW_API const char* tw_status_name(tw_status s);
TW_API const char* tw_last_error(void);
TW_API void tw_string_free(char* s);

/* Frame with lambda = lambda_gamma, k = 0, omega = 1. */
TW_API tw_frame tw_frame_from_lambda_gamma(double lambda_gamma, double xi0);

/* Exactly one of family / raw must be non-null. c1 and frame are optional. */
TW_API tw_status tw_classify(const char* family, const tw_equation* raw, const double* c1, const tw_frame* frame,
                             char** json_out);

TW_API tw_status tw_solution_new(const char* family, double c1, const tw_frame* frame, tw_branch branch,
                                 tw_solution** out);
/* Accepts the document produced by tw_solution_describe. */
TW_API tw_status tw_solution_from_json(const char* json, tw_solution** out);
TW_API void tw_solution_free(tw_solution* s);

TW_API tw_status tw_solution_describe(const tw_solution* s, char** json_out);
/* h and psi may be NaN (outside the real domain) or infinite (at a pole). */
TW_API tw_status tw_solution_eval(const tw_solution* s, double xi, double* h, double* psi);
TW_API tw_status tw_solution_sample_csv(const tw_solution* s, double xi_min, double xi_max, int n, char** csv_out);
/* tolerance <= 0 keeps the per-oracle defaults. with_pde adds the PDE residual
 * on the default (z, t) grid of the solution's frame. */
TW_API tw_status tw_solution_verify(const tw_solution* s, double xi_min, double xi_max, int n, double tolerance,
                                    int with_pde, int* all_pass, char** json_out);

/* Writes the figure CSVs and figures.json into directory. */
TW_API tw_status tw_figures(const char* directory, int n, char** sidecar_json_out);
/* Atomic write (temporary file + rename). */
TW_API tw_status tw_write_file(const char* path, const char* content);

TW_API tw_status tw_jacobi(double u, double m, double* sn, double* cn, double* dn);
TW_API tw_status tw_weierstrass_p(double z, double g2, double g3, double* p, double* dp);
TW_API tw_status tw_hyp2f1(double a, double b, double c, double x, double* out);

#ifdef __cplusplus
}
#endif

#endif
