#include "invgen/json_io.hpp"

#include <sstream>

namespace invgen {

namespace {

const Json& expect(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  Json j;
  if (f.is_prime_field()) {
    j["kind"] = "prime";
    j["p"] = f.p;
  } else {
    j["kind"] = "rational";
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  std::string kind = expect(j, "kind").get<std::string>();
  if (kind == "prime") {
    if (!expect(j, "p").is_number_integer())
      fail(Errc::InvalidInput, "field p must be an integer");
    return FieldSpec::prime(expect(j, "p").get<std::int64_t>());
  }
  if (kind == "rational") return FieldSpec::rationals();
  fail(Errc::InvalidInput, "field kind must be 'prime' or 'rational'");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array()) fail(Errc::InvalidInput, "matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      fail(Errc::InvalidInput, "ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& cell = row.at(k);
      if (cell.is_number_integer())
        m(i, k) = Scalar::of(f, cell.get<std::int64_t>());
      else if (cell.is_string())
        m(i, k) = Scalar::parse(f, cell.get<std::string>());
      else
        fail(Errc::InvalidInput, "matrix entries must be strings or integers");
    }
  }
  return m;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t rows,
                        std::size_t cols) {
  Matrix m = matrix_from_json(f, j);
  if (m.rows() != rows || m.cols() != cols)
    fail(Errc::InvalidInput, "matrix has wrong shape");
  return m;
}

Json space_to_json(const BilinearSpace& space) {
  Json j;
  j["field"] = field_to_json(space.field());
  j["n"] = space.dim();
  j["form"] = form_name(space.kind());
  if (space.kind() == FormKind::Symmetric &&
      space.gram() == Matrix::identity(space.field(), space.dim()))
    j["gram"] = "identity";
  else if (space.kind() == FormKind::Skew &&
           space.gram() ==
               BilinearSpace::standard_skew_gram(space.field(), space.dim()))
    j["gram"] = "standard_skew";
  else
    j["gram"] = matrix_to_json(space.gram());
  return j;
}

BilinearSpace space_from_json(const Json& j) {
  FieldSpec f = field_from_json(expect(j, "field"));
  if (!expect(j, "n").is_number_integer())
    fail(Errc::InvalidInput, "n must be an integer");
  int n = expect(j, "n").get<int>();
  if (n < 1) fail(Errc::InvalidInput, "n must be positive");
  std::string form = expect(j, "form").get<std::string>();
  FormKind kind;
  if (form == "symmetric")
    kind = FormKind::Symmetric;
  else if (form == "skew")
    kind = FormKind::Skew;
  else
    fail(Errc::InvalidInput, "form must be 'symmetric' or 'skew'");
  const Json& gram = expect(j, "gram");
  if (gram.is_string()) {
    std::string name = gram.get<std::string>();
    if (name == "identity") {
      if (kind != FormKind::Symmetric)
        fail(Errc::InvalidInput, "gram 'identity' is symmetric");
      return BilinearSpace(kind, Matrix::identity(f, n));
    }
    if (name == "standard_skew") {
      if (kind != FormKind::Skew)
        fail(Errc::InvalidInput, "gram 'standard_skew' is skew");
      return BilinearSpace(kind, BilinearSpace::standard_skew_gram(f, n));
    }
    fail(Errc::InvalidInput, "gram must be 'identity', 'standard_skew' or a matrix");
  }
  return BilinearSpace(kind, matrix_from_json(f, gram, n, n));
}

Json tuple_to_json(const GeneratorTuple& t) {
  Json j;
  j["space"] = space_to_json(t.space);
  Json mats = Json::array();
  for (const auto& m : t.mats) mats.push_back(matrix_to_json(m));
  j["tuple"] = std::move(mats);
  return j;
}

GeneratorTuple tuple_from_json(const Json& j) {
  BilinearSpace space = space_from_json(expect(j, "space"));
  const Json& arr = expect(j, "tuple");
  if (!arr.is_array() || arr.empty())
    fail(Errc::InvalidInput, "tuple must be a nonempty array of matrices");
  std::vector<Matrix> mats;
  for (const auto& mj : arr)
    mats.push_back(matrix_from_json(space.field(), mj, space.dim(), space.dim()));
  return GeneratorTuple(std::move(space), std::move(mats));
}

Json check_report_to_json(const CheckReport& rep) {
  Json j;
  j["generates"] = rep.generates;
  j["closure_dim"] = rep.closure_dim;
  Json wits = Json::array();
  for (const auto& [key, list] : rep.witnesses) {
    for (const auto& w : list) {
      Json wj;
      wj["d"] = key.d;
      wj["l"] = key.l;
      wj["basis"] = matrix_to_json(w.basis());
      wits.push_back(std::move(wj));
    }
  }
  j["witnesses"] = std::move(wits);
  return j;
}

Json count_table_to_json(const CountTable& table) {
  Json j;
  j["kind"] = form_name(table.kind);
  j["n"] = table.n;
  j["r"] = table.r;
  j["d"] = table.d;
  j["l"] = table.l;
  Json counts = Json::array();
  for (const auto& [q, count] : table.counts) {
    Json row;
    row["q"] = q;
    row["count"] = count.str();  // counts may exceed 2^53
    counts.push_back(std::move(row));
  }
  j["counts"] = std::move(counts);
  return j;
}

std::string count_table_to_csv(const CountTable& table) {
  std::ostringstream os;
  os << "kind,n,r,d,l,q,count\n";
  for (const auto& [q, count] : table.counts)
    os << form_name(table.kind) << ',' << table.n << ',' << table.r << ','
       << table.d << ',' << table.l << ',' << q << ',' << count.str() << '\n';
  return os.str();
}

Json census_record_to_json(const CensusRecord& rec) {
  Json j;
  j["label"] = rec.label;
  j["d"] = rec.d;
  j["l"] = rec.l;
  j["dim"] = rec.dim;
  j["components"] = rec.component_count;
  return j;
}

Json extremal_to_json(const Extremal& ext) {
  Json j;
  j["max_dim"] = ext.max_dim;
  Json arg = Json::array();
  for (auto [l, d] : ext.argmax) {
    Json s;
    s["l"] = l;
    s["d"] = d;
    arg.push_back(std::move(s));
  }
  j["argmax"] = std::move(arg);
  j["codim"] = ext.codim;
  return j;
}

}  // namespace invgen
