#include "twistcert/extensions.hpp"

#include <map>

namespace twistcert {

std::vector<Word> braid_relators(int n) {
  std::vector<Word> out;
  auto s = [](int i, long long e = 1) { return Word::generator("s" + std::to_string(i), e); };
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1)
        out.push_back(s(i) * s(j) * s(i) * s(j, -1) * s(i, -1) * s(j, -1));
      else
        out.push_back(commutator(s(i), s(j)));
    }
  }
  return out;
}

InvolutiveAutomorphism::InvolutiveAutomorphism(int strands, Binding images)
    : strands_(strands), images_(std::move(images)) {
  const auto names = braid_generator_names(strands);
  const Alphabet alphabet(names);
  for (const auto& [gen, image] : images_) {
    if (gen == "D" || !alphabet.contains(gen)) throw ModelError("automorphism defined on non-generator " + gen);
    for (const auto& l : image.letters())
      if (!alphabet.contains(l.gen)) throw ModelError("automorphism image uses unknown generator " + l.gen);
  }
  for (int i = 1; i < strands; ++i)
    if (!images_.contains("s" + std::to_string(i)))
      throw ModelError("automorphism missing image of s" + std::to_string(i));

  std::vector<Letter> delta_raw;
  for (int j : PermutationBraid::delta(strands).positive_word()) delta_raw.push_back({"s" + std::to_string(j), 1});
  images_["D"] = substitute(Word(delta_raw), images_);

  for (const auto& rel : braid_relators(strands)) {
    if (!braid_from_word(apply(rel), strands).is_identity())
      throw ModelError("automorphism does not preserve relator " + rel.str());
  }
  for (int i = 1; i < strands; ++i) {
    const Word g = Word::generator("s" + std::to_string(i));
    if (!braid_equals(braid_from_word(apply(apply(g)), strands), braid_from_word(g, strands)))
      throw ModelError("automorphism is not an involution on s" + std::to_string(i));
  }
}

Word InvolutiveAutomorphism::apply(const Word& w) const { return substitute(w, images_); }

BraidElement InvolutiveAutomorphism::apply(const BraidElement& b) const {
  return braid_from_word(apply(b.to_word()), strands_);
}

// ---------------------------------------------------------------------------

Element Model::evaluate(const Word& w, const Binding& binding) const { return evaluate(substitute(w, binding)); }

void Model::check_letters(const Word& w) const {
  for (const auto& l : w.letters())
    if (!alphabet().contains(l.gen)) throw InputError("generator " + l.gen + " is not in model " + id());
}

std::string render(const Element& e) {
  struct Visitor {
    std::string operator()(const BraidElement& b) const { return b.str(); }
    std::string operator()(const ExtendedElement& x) const {
      return "(" + x.base.str() + ", r^" + (x.flip ? "1" : "0") + ")";
    }
    std::string operator()(const DihedralElement& d) const {
      return "(" + std::to_string(d.a) + ", " + std::to_string(d.b) + ")";
    }
  };
  return std::visit(Visitor{}, e);
}

BraidModel::BraidModel(std::string id, int strands, std::vector<std::string> soundness)
    : Model(std::move(soundness)), id_(std::move(id)), strands_(strands), alphabet_(braid_generator_names(strands)) {}

Element BraidModel::evaluate(const Word& w) const {
  check_letters(w);
  return braid_from_word(w, strands_);
}

namespace {

Alphabet extended_alphabet(int strands) {
  auto names = braid_generator_names(strands);
  names.push_back("r");
  return Alphabet(std::move(names));
}

}  // namespace

ExtendedModel::ExtendedModel(std::string id, InvolutiveAutomorphism phi, std::vector<std::string> soundness)
    : Model(std::move(soundness)),
      id_(std::move(id)),
      phi_(std::move(phi)),
      alphabet_(extended_alphabet(phi_.strands())) {}

Element ExtendedModel::evaluate(const Word& w) const {
  check_letters(w);
  const int n = phi_.strands();
  ExtendedElement acc{BraidElement(n), false};
  for (const auto& l : w.letters()) {
    if (l.gen == "r") {
      if (l.exp % 2 != 0) acc.flip = !acc.flip;
      continue;
    }
    Word piece = Word::generator(l.gen, l.exp);
    if (acc.flip) piece = phi_.apply(piece);
    acc.base *= braid_from_word(piece, n);
  }
  return acc;
}

ExtendedElement ExtendedModel::multiply(const ExtendedElement& u, const ExtendedElement& v) const {
  return {u.base * (u.flip ? phi_.apply(v.base) : v.base), u.flip != v.flip};
}

DihedralModel::DihedralModel(std::vector<std::string> soundness) : Model(std::move(soundness)) {}

Element DihedralModel::evaluate(const Word& w) const {
  check_letters(w);
  DihedralElement acc;
  for (const auto& l : w.letters())
    acc = acc * (l.gen == "y" ? DihedralElement{l.exp, 0} : DihedralElement{0, l.exp});
  return acc;
}

std::shared_ptr<const ExtendedModel> make_extension(const BraidModel& base, InvolutiveAutomorphism phi,
                                                    std::string id, std::vector<std::string> soundness) {
  if (phi.strands() != base.strands()) throw ModelError("automorphism strand count differs from base model");
  std::vector<std::string> ledger = base.soundness();
  ledger.insert(ledger.end(), soundness.begin(), soundness.end());
  return std::make_shared<const ExtendedModel>(std::move(id), std::move(phi), std::move(ledger));
}

// ---------------------------------------------------------------------------
// Registry

namespace {

Word sw(int i, long long e = 1) { return Word::generator("s" + std::to_string(i), e); }

struct Registry {
  BraidModel b3{"B3", 3,
                {"twists about two curves meeting once satisfy t_a t_b t_a = t_b t_a t_b, so s1 -> t_a, s2 -> t_b "
                 "is a homomorphism from B3 to the mapping class group of the one-holed torus",
                 "the boundary twist of the one-holed torus is (t_a t_b)^6, the image of D^4"}};
  BraidModel b4{"B4", 4,
                {"a chain of three curves a, b, c gives a homomorphism s1 -> t_a, s2 -> t_b, s3 -> t_c from B4 to "
                 "the mapping class group of the two-holed torus",
                 "chain relation: (t_a t_b t_c)^4 = t_d t_e for the boundary curves d, e; only the product t_d t_e "
                 "is modelled, as the image of D^2"}};
  std::shared_ptr<const ExtendedModel> b3x;
  std::shared_ptr<const ExtendedModel> b4x;
  DihedralModel zz{{"the twist about the boundary of a one-holed Klein bottle is the square y^2 of the crosscap "
                    "transposition y",
                    "y is conjugate to y^-1 by a diffeomorphism f of the surface: f y f^-1 = y^-1"}};

  Registry() {
    b3x = make_extension(
        b3, InvolutiveAutomorphism(3, {{"s1", sw(1, -1)}, {"s2", sw(2, -1)}}), "B3xZ2",
        {"an orientation-reversing involution r of the one-holed torus with r(a) = a, r(b) = b conjugates each "
         "twist to its inverse, so r acts by s_i -> s_i^-1",
         "r extends to an involution of any closed surface containing the one-holed torus along the standard "
         "embedding"});
    b4x = make_extension(
        b4, InvolutiveAutomorphism(4, {{"s1", sw(3, -1)}, {"s2", sw(2, -1)}, {"s3", sw(1, -1)}}), "B4xZ2",
        {"an orientation-reversing involution r of the two-holed torus with r(a) = c, r(b) = b, r(c) = a acts by "
         "s1 -> s3^-1, s2 -> s2^-1, s3 -> s1^-1",
         "capping d with a Mobius band kills t_d, so t_d t_e maps to the twist about the separating curve e; r "
         "extends over the capped surface"});
  }
};

const Registry& registry() {
  static const Registry instance;
  return instance;
}

}  // namespace

const Model& find_model(std::string_view id) {
  const Registry& reg = registry();
  if (id == "B3") return reg.b3;
  if (id == "B4") return reg.b4;
  if (id == "B3xZ2") return *reg.b3x;
  if (id == "B4xZ2") return *reg.b4x;
  if (id == "ZsemiZ") return reg.zz;
  throw InputError("unknown model: " + std::string(id));
}

std::vector<std::string> model_ids() { return {"B3", "B4", "B3xZ2", "B4xZ2", "ZsemiZ"}; }

bool ext_equals(const Word& u, const Word& v, const ExtendedModel& model, const Binding& binding) {
  return model.evaluate(u, binding) == model.evaluate(v, binding);
}

DihedralElement dihedral_coordinates(const Word& w) {
  return std::get<DihedralElement>(find_model("ZsemiZ").evaluate(w));
}

bool dihedral_equals(const Word& u, const Word& v) { return dihedral_coordinates(u) == dihedral_coordinates(v); }

}  // namespace twistcert
