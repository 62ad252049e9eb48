#pragma once

// JSON encodings of scalars, matrices and decomposition results.
//
//   scalar:  [[re_st, im_st], [re_inf, im_inf]]
//   matrix:  {"rows": m, "cols": n,
//             "standard": [[[re, im], ...], ...],       row-major
//             "infinitesimal": [[[re, im], ...], ...]}
//
// Result documents carry "kind" and the input matrix "A" so they can be
// re-verified on their own. Schema violations throw Error(InvalidArgument).

#include <json.hpp>
#include <vector>

#include "dcla/herm_spectral.hpp"
#include "dcla/right_eig.hpp"
#include "dcla/svd.hpp"

namespace dcla::json_io {

using nlohmann::json;

json encode(const DualComplex& q);
json encode(const DCMatrix& a);
json encode_complex(cdouble z);

DualComplex decode_scalar(const json& j);
DCMatrix decode_matrix(const json& j);
cdouble decode_complex(const json& j);

/// {"kind": "spectral", "A", "U", "blocks": [{"kind", "lambda", "mu", "mu_abs"}], "residual"}
json encode_spectral(const DCMatrix& a, const SpectralDecomposition& d);
SpectralDecomposition decode_spectral(const json& j);

/// {"kind": "svd", "A", "U", "V", "standard_blocks": [{"sigma", "nu"?}],
///  "infinitesimal_values", "r", "p", "residual"}
json encode_svd(const DCMatrix& a, const SvdResult& s, const ResidualPair& residual);
SvdResult decode_svd(const json& j);

/// {"kind": "eig", "A", "eigenpairs": [{"value", "vector", "residual"}]}
json encode_eigs(const DCMatrix& a, const std::vector<RightEigenPair>& pairs);
std::vector<RightEigenPair> decode_eigs(const json& j);

json encode_residual(const ResidualPair& r);

}  // namespace dcla::json_io
