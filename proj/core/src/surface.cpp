#include "mcgsig/surface.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace mcgsig {

SurfaceModel::SurfaceModel(std::size_t genus, Calibration cal) : genus_(genus), cal_(cal) {
  const std::size_t n = dim();
  omega_ = Mat(n, n);
  for (std::size_t i = 0; i < genus_; ++i) {
    omega_(i, genus_ + i) = 1;
    omega_(genus_ + i, i) = -1;
  }
  // d stays in the radical: its row and column are zero.
}

Vec SurfaceModel::boundary_class() const { return unit_vec(dim(), d_index()); }

Rat SurfaceModel::arc_pairing(const Vec& c) const {
  if (c.size() != dim()) throw std::invalid_argument("arc_pairing: dimension mismatch");
  return Rat(cal_.eps_arc) * c[d_index()];
}

Rat SurfaceModel::pairing(const Vec& x, const Vec& y) const { return dot(x, omega_ * y); }

MappingClassRep MappingClassRep::identity(const SurfaceModel& model) {
  return {model, Mat::identity(model.dim()), Vec(model.dim())};
}

void MappingClassRep::check_invariants() const {
  const Vec s = model.boundary_class();
  if (action * s != s)
    throw std::invalid_argument("MappingClassRep: action does not fix the boundary class");
  const Mat& omega = model.omega();
  if (action.transpose() * omega * action != omega)
    throw std::invalid_argument("MappingClassRep: action does not preserve the intersection form");
}

MappingClassRep twist(const TwistGenerator& gen, const SurfaceModel& model) {
  const std::size_t n = model.dim();
  if (gen.cls.size() != n) throw std::invalid_argument("twist: curve class dimension mismatch");
  if (is_zero(gen.cls)) throw std::invalid_argument("twist: zero curve class");
  for (const Rat& x : gen.cls)
    if (x.get_den() != 1) throw std::invalid_argument("twist: curve class must be integral");

  const Rat eps = gen.handedness * model.calibration().eps_twist;
  // Transvection x -> x + eps <x, c> c.
  const Vec omega_c = model.omega() * gen.cls;
  Mat m = Mat::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (omega_c[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) m(i, j) += eps * omega_c[j] * gen.cls[i];
  }
  const Vec w = (eps * model.arc_pairing(gen.cls)) * gen.cls;
  MappingClassRep rep{model, m, w};
  rep.check_invariants();
  return rep;
}

MappingClassRep compose(const MappingClassRep& x, const MappingClassRep& y) {
  if (!(x.model == y.model)) throw std::invalid_argument("compose: model mismatch");
  return {x.model, x.action * y.action, x.disp + x.action * y.disp};
}

MappingClassRep inverse(const MappingClassRep& x) {
  const Mat inv = mat_inverse(x.action);
  return {x.model, inv, Rat(-1) * (inv * x.disp)};
}

MappingClassRep power(const MappingClassRep& x, long k) {
  MappingClassRep base = k < 0 ? inverse(x) : x;
  MappingClassRep acc = MappingClassRep::identity(x.model);
  for (long i = 0; i < std::labs(k); ++i) acc = compose(acc, base);
  return acc;
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Word parse_word(const std::string& text) {
  Word word;
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) return word;
  while (true) {
    skip_ws(text, pos);
    const std::size_t name_start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (pos == name_start) throw WordParseError("expected generator name", name_start);
    std::string name = text.substr(name_start, pos - name_start);
    long exponent = 1;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws(text, pos);
      const std::size_t exp_start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == exp_start || (pos == exp_start + 1 && !std::isdigit(static_cast<unsigned char>(text[exp_start]))))
        throw WordParseError("expected integer exponent", exp_start);
      exponent = std::stol(text.substr(exp_start, pos - exp_start));
      if (exponent == 0) throw WordParseError("zero exponent not allowed", exp_start);
    }
    word.push_back({std::move(name), exponent});
    skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '*') throw WordParseError("expected '*' between factors", pos);
    ++pos;
  }
  return word;
}

std::string word_to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += "*";
    out += word[i].name;
    if (word[i].exponent != 1) out += "^" + std::to_string(word[i].exponent);
  }
  return out;
}

Word word_inverse(const Word& word) {
  Word inv;
  for (auto it = word.rbegin(); it != word.rend(); ++it) inv.push_back({it->name, -it->exponent});
  return inv;
}

Word word_concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Catalog Catalog::standard(const SurfaceModel& model) {
  Catalog cat;
  const std::size_t g = model.genus();
  const std::size_t n = model.dim();
  for (std::size_t i = 0; i < g; ++i) {
    cat.register_generator({"t_a" + std::to_string(i + 1), unit_vec(n, i), +1});
    cat.register_generator({"t_b" + std::to_string(i + 1), unit_vec(n, g + i), +1});
  }
  cat.register_generator({"t_d", unit_vec(n, model.d_index()), +1});
  if (g >= 1) {
    // [alpha] = a_1, [alpha'] = -a_1 - d, [beta] = d; [alpha]+[alpha']+[beta] = 0.
    cat.register_generator({"t_alpha", unit_vec(n, 0), +1});
    Vec aprime(n);
    aprime[0] = -1;
    aprime[model.d_index()] = -1;
    cat.register_generator({"t_alpha_prime", aprime, +1});
    cat.register_generator({"t_beta", unit_vec(n, model.d_index()), +1});
  } else {
    cat.register_generator({"t_beta", unit_vec(n, model.d_index()), +1});
  }
  return cat;
}

void Catalog::register_generator(TwistGenerator gen) {
  gens_[gen.name] = std::move(gen);
}

const TwistGenerator& Catalog::resolve(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw UnknownGenerator(name);
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, gen] : gens_) out.push_back(name);
  return out;
}

MappingClassRep evaluate(const Word& word, const Catalog& catalog, const SurfaceModel& model) {
  MappingClassRep acc = MappingClassRep::identity(model);
  for (const auto& factor : word) {
    const MappingClassRep gen_rep = twist(catalog.resolve(factor.name), model);
    acc = compose(acc, power(gen_rep, factor.exponent));
  }
  return acc;
}

ProjectiveRational class_function_m(const MappingClassRep& rep) {
  const std::size_t n = rep.model.dim();
  const Mat diff = rep.action - Mat::identity(n);
  const Subspace im = image(diff);
  // Columns: [w | s | basis of Im(M-I)]; a kernel vector (p, q, c...) means
  // p w + q s lies in Im(M-I). The basis columns are independent, so the
  // projection to (p, q) is injective on the kernel.
  std::vector<Vec> cols;
  cols.push_back(rep.disp);
  cols.push_back(rep.model.boundary_class());
  for (std::size_t i = 0; i < im.dim(); ++i) cols.push_back(im.basis().row(i));
  const Subspace line = kernel(Mat::from_cols(cols, n));
  if (line.dim() != 1)
    throw DegenerateKernel("class_function_m: (p,q) solution space has dimension " +
                           std::to_string(line.dim()));
  const Vec v = line.basis().row(0);
  return ProjectiveRational::from_coords(v[0], v[1]);
}

Word surjectivity_witness(const ProjectiveRational& target, const SurfaceModel& model,
                          const Catalog& catalog) {
  if (target == ProjectiveRational::zero()) return {};

  auto value_of = [&](const Word& w) { return class_function_m(evaluate(w, catalog, model)); };

  if (model.genus() == 0) {
    if (target.p() != 1)
      throw std::invalid_argument("surjectivity_witness: at g=0 the image is [1:Z], target " +
                                  target.str() + " unreachable");
    const ProjectiveRational m1 = value_of({{"t_d", 1}});
    // m(t_d) = [1:c] with c = +-1; t_d^k hits [1:kc].
    const long c = m1.q().get_si();
    const long k = target.q().get_si() * c;
    return {{"t_d", k}};
  }

  if (target == ProjectiveRational::absorbing()) {
    return parse_word("t_alpha^-1*t_alpha_prime*t_beta^-1");
  }

  // Base word with twist exponent p = P-1 has value [P:c], c = +-1.
  const long p = target.p().get_si() - 1;
  Word base;
  if (p != 0) base.push_back({"t_alpha", p});
  base.push_back({"t_alpha_prime", 1});
  base.push_back({"t_beta", -1});
  const ProjectiveRational m0 = value_of(base);
  const long c = m0.q().get_si();
  const long k = target.q().get_si() * c;
  if (k == 1) return base;
  Word result;
  const Word unit = k > 0 ? base : word_inverse(base);
  for (long i = 0; i < std::labs(k); ++i) result = word_concat(result, unit);
  return result;
}

}  // namespace mcgsig
