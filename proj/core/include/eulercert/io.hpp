#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eulercert/doubling.hpp"
#include "eulercert/surfrep.hpp"

namespace eulercert {

/// Representation file: header `genus g field <rational|quad d|ratfunc>`,
/// then 2g matrices, each four exact field elements separated by whitespace,
/// row-major, in pair order A1 B1 A2 B2 ...
SurfaceRep read_rep(std::istream& in);
void write_rep(std::ostream& out, const SurfaceRep& rep);

/// Tuple file: header `pairs n field ...`, then 2n matrices a1 b1 ... an bn
/// in the same matrix syntax.
std::vector<std::pair<Mat2, Mat2>> read_pairs(std::istream& in);
void write_pairs(std::ostream& out, const std::vector<std::pair<Mat2, Mat2>>& pairs);

SurfaceRep load_rep(const std::string& path);
/// Loads a tuple either from the plain-text tuple format or from an emitted
/// certificate JSON record (sniffed by the leading `{`), so every certify
/// output round-trips as certify input.
std::vector<std::pair<Mat2, Mat2>> load_pairs(const std::string& path);

nlohmann::json matrix_record(const Mat2& m);
Mat2 matrix_from_record(const nlohmann::json& j, const FieldDesc& field);

nlohmann::json pairs_record(const std::vector<std::pair<Mat2, Mat2>>& pairs);
std::vector<std::pair<Mat2, Mat2>> pairs_from_record(const nlohmann::json& j);

/// Full certificate record with every DoublingResult field; exact elements
/// appear as strings in the shared textual syntax.
nlohmann::json certificate_record(const Certificate& cert);

/// Machine-readable error record {"type":"error","error":name,"message":...}.
nlohmann::json error_record(const std::string& name, const std::string& message);

/// Class name of a library error for error records ("NotHyperbolic", ...).
std::string error_name(const std::exception& e);

}  // namespace eulercert
