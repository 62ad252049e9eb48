#include "dcla/json_io.hpp"

#include <cmath>
#include <string>

#include "dcla/error.hpp"

namespace dcla::json_io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) schema_error(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(std::string(what) + ": number is not finite");
  return v;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

Eigen::Index dimension(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    schema_error(std::string("field '") + name + "' must be a nonnegative integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

json encode_part(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(encode_complex(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix decode_part(const json& j, Eigen::Index rows, Eigen::Index cols, const char* name) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    schema_error(std::string(name) + ": expected " + std::to_string(rows) + " rows");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      schema_error(std::string(name) + ": row " + std::to_string(i) + " must have " +
                   std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = decode_complex(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace

json encode_complex(cdouble z) { return json::array({z.real(), z.imag()}); }

cdouble decode_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("complex entry must be [re, im]");
  return {finite_number(j[0], "re"), finite_number(j[1], "im")};
}

json encode(const DualComplex& q) {
  return json::array({encode_complex(q.standard), encode_complex(q.infinitesimal)});
}

DualComplex decode_scalar(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("scalar must be [[re_st, im_st], [re_inf, im_inf]]");
  return {decode_complex(j[0]), decode_complex(j[1])};
}

json encode(const DCMatrix& a) {
  json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["standard"] = encode_part(a.standard());
  j["infinitesimal"] = encode_part(a.infinitesimal());
  return j;
}

DCMatrix decode_matrix(const json& j) {
  const auto rows = dimension(j, "rows");
  const auto cols = dimension(j, "cols");
  if (rows == 0 || cols == 0) schema_error("matrix dimensions must be positive");
  return {decode_part(field(j, "standard"), rows, cols, "standard"),
          decode_part(field(j, "infinitesimal"), rows, cols, "infinitesimal")};
}

json encode_residual(const ResidualPair& r) { return json::array({r.standard, r.infinitesimal}); }

json encode_spectral(const DCMatrix& a, const SpectralDecomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json jb;
    jb["kind"] = b.kind == BlockKind::Eigen ? "Eigen" : "Sub";
    jb["lambda"] = b.lambda;
    if (b.kind == BlockKind::Sub) {
      jb["mu"] = encode_complex(b.mu);
      jb["mu_abs"] = std::abs(b.mu);
    }
    blocks.push_back(std::move(jb));
  }
  json j;
  j["kind"] = "spectral";
  j["A"] = encode(a);
  j["U"] = encode(d.U);
  j["blocks"] = std::move(blocks);
  j["residual"] = encode_residual(d.residual);
  return j;
}

SpectralDecomposition decode_spectral(const json& j) {
  SpectralDecomposition d;
  d.U = decode_matrix(field(j, "U"));
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) schema_error("'blocks' must be an array");
  for (const json& jb : blocks) {
    SpectralBlock b;
    const json& kind = field(jb, "kind");
    if (kind == "Eigen") {
      b.kind = BlockKind::Eigen;
    } else if (kind == "Sub") {
      b.kind = BlockKind::Sub;
      b.mu = decode_complex(field(jb, "mu"));
    } else {
      schema_error("block kind must be \"Eigen\" or \"Sub\"");
    }
    b.lambda = finite_number(field(jb, "lambda"), "lambda");
    d.blocks.push_back(b);
  }
  return d;
}

json encode_svd(const DCMatrix& a, const SvdResult& s, const ResidualPair& residual) {
  json blocks = json::array();
  for (const auto& b : s.standard_blocks) {
    json jb;
    jb["sigma"] = b.sigma;
    if (b.paired()) jb["nu"] = encode_complex(b.nu);
    blocks.push_back(std::move(jb));
  }
  json j;
  j["kind"] = "svd";
  j["A"] = encode(a);
  j["U"] = encode(s.U);
  j["V"] = encode(s.V);
  j["standard_blocks"] = std::move(blocks);
  j["infinitesimal_values"] = s.infinitesimal_values;
  j["r"] = s.standard_rank;
  j["p"] = s.infinitesimal_rank;
  j["residual"] = encode_residual(residual);
  return j;
}

SvdResult decode_svd(const json& j) {
  SvdResult s;
  s.U = decode_matrix(field(j, "U"));
  s.V = decode_matrix(field(j, "V"));
  const json& blocks = field(j, "standard_blocks");
  if (!blocks.is_array()) schema_error("'standard_blocks' must be an array");
  for (const json& jb : blocks) {
    SingularBlock b;
    b.sigma = finite_number(field(jb, "sigma"), "sigma");
    if (jb.contains("nu")) b.nu = decode_complex(jb.at("nu"));
    s.standard_blocks.push_back(b);
  }
  const json& inf = field(j, "infinitesimal_values");
  if (!inf.is_array()) schema_error("'infinitesimal_values' must be an array");
  for (const json& v : inf) s.infinitesimal_values.push_back(finite_number(v, "infinitesimal value"));
  s.standard_rank = dimension(j, "r");
  s.infinitesimal_rank = dimension(j, "p");
  return s;
}

json encode_eigs(const DCMatrix& a, const std::vector<RightEigenPair>& pairs) {
  json list = json::array();
  for (const auto& p : pairs) {
    json jp;
    jp["value"] = encode(p.value);
    jp["vector"] = encode(p.vector);
    jp["residual"] = encode_residual(p.residual);
    if (p.clustered) jp["clustered"] = true;
    list.push_back(std::move(jp));
  }
  json j;
  j["kind"] = "eig";
  j["A"] = encode(a);
  j["eigenpairs"] = std::move(list);
  return j;
}

std::vector<RightEigenPair> decode_eigs(const json& j) {
  const json& list = field(j, "eigenpairs");
  if (!list.is_array()) schema_error("'eigenpairs' must be an array");
  std::vector<RightEigenPair> out;
  for (const json& jp : list) {
    RightEigenPair p;
    p.value = decode_scalar(field(jp, "value"));
    p.vector = decode_matrix(field(jp, "vector"));
    p.clustered = jp.value("clustered", false);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace dcla::json_io
