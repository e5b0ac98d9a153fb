#ifndef CHAINCORR_H
#define CHAINCORR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  // A required pointer argument was NULL.
  CC_STATUS_NULL_POINTER = 1,
  // An argument lies outside its domain (site index, |f| > 1, ...).
  CC_STATUS_DOMAIN = 2,
  // The request exceeds a size limit.
  CC_STATUS_CAPACITY = 3,
  // An iterative computation did not converge.
  CC_STATUS_COMPUTATION = 4,
  // A result failed an internal consistency check.
  CC_STATUS_CONSISTENCY = 5,
  // A string argument was not valid UTF-8.
  CC_STATUS_INVALID_STRING = 6,
  // A Rust panic was caught at the boundary.
  CC_STATUS_PANIC = 7,
} CcStatus;

// Which qubit a one-way discord measures.
typedef enum CcSide {
  // The chain-side qubit.
  CC_SIDE_A = 0,
  // The detached qubit.
  CC_SIDE_B = 1,
} CcSide;

// Opaque chain description.
typedef struct CcChain CcChain;

// Opaque two-qubit X state.
typedef struct CcXState CcXState;

// Plain copy of an X state's entries.
typedef struct CcXStateData {
  double p1;
  double p2;
  double p3;
  double p4;
  double c14_re;
  double c14_im;
  double c23_re;
  double c23_im;
} CcXStateData;

// Every correlation measure of one state, in bits. `_ab` fields measure
// the detached qubit, `_ba` fields the chain-side one.
typedef struct CcReport {
  double entropy_total;
  double entropy_a;
  double entropy_b;
  double mutual_info;
  double classical_ab;
  double classical_ba;
  double discord_ab;
  double discord_ba;
  double discord_two_way;
  double concurrence;
  double eof;
} CcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call into this library from the
// same thread.
const char *cc_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *cc_version(void);

// Creates a chain of `n_sites` spins with coupling `coupling` and field
// `field`.
//
// # Safety
// `out` must be valid for writing one pointer.
enum CcStatus cc_chain_new(size_t n_sites, double coupling, double field, struct CcChain **out);

// # Safety
// `chain` must be NULL or a handle from `cc_chain_new` not yet freed.
void cc_chain_free(struct CcChain *chain);

// Transition amplitude f_r(t) from site 1 to site `r` (1-based) at time `t`.
//
// # Safety
// `chain` must be a live handle; `re` and `im` must be valid for writing.
enum CcStatus cc_amplitude(const struct CcChain *chain, size_t r, double t, double *re, double *im);

// Creates an X state from its entries; fails with `Domain` when they do
// not form a density matrix.
//
// # Safety
// `data` must point to a readable `CcXStateData`; `out` must be valid for
// writing one pointer.
enum CcStatus cc_xstate_new(const struct CcXStateData *data, struct CcXState **out);

// Creates a family member from text such as "werner:0.7" or
// "mmm:0.53,0.34,0.035" (families pure, werner, mdms-p, mdms-r, mmm).
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be valid for writing
// one pointer.
enum CcStatus cc_xstate_family(const char *spec, struct CcXState **out);

// # Safety
// `state` must be NULL or a handle from this library not yet freed.
void cc_xstate_free(struct CcXState *state);

// Copies the entries of a state.
//
// # Safety
// `state` must be a live handle; `out` must be valid for writing.
enum CcStatus cc_xstate_get(const struct CcXState *state, struct CcXStateData *out);

// Sends the chain-side qubit through the channel with amplitude
// f = f_re + i f_im (|f| ≤ 1) and returns a new state.
//
// # Safety
// `state` must be a live handle; `out` must be valid for writing one pointer.
enum CcStatus cc_evolve_pair(const struct CcXState *state,
                             double f_re,
                             double f_im,
                             struct CcXState **out);

// State of pair (r, 0) at time `t` when the chain-side qubit starts on
// site 1.
//
// # Safety
// `chain` and `state` must be live handles; `out` must be valid for
// writing one pointer.
enum CcStatus cc_evolve_at_time(const struct CcChain *chain,
                                const struct CcXState *state,
                                size_t r,
                                double t,
                                struct CcXState **out);

// All correlation measures of a state.
//
// # Safety
// `state` must be a live handle; `out` must be valid for writing.
enum CcStatus cc_report(const struct CcXState *state, struct CcReport *out);

// One-way discord with a projective measurement on `measured`.
//
// # Safety
// `state` must be a live handle; `out` must be valid for writing.
enum CcStatus cc_discord_one_way(const struct CcXState *state, enum CcSide measured, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHAINCORR_H */
