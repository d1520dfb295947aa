#pragma once

namespace ovp::tol {

// Global numeric tolerances. Mutable on purpose: callers that need tighter
// or looser checking adjust them process-wide.
inline double matrix_identity = 1e-10;  // relative, matrix identity checks
inline double position = 1e-9;          // absolute, path positions
inline double rate = 1e-9;              // absolute, path rates and pushing
inline double boundary = 1e-9;          // region / grid boundary exclusion
inline double strict = 1e-12;           // margin when testing strict inequalities

}  // namespace ovp::tol
