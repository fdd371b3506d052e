#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "twistcert/garside.hpp"
#include "twistcert/words.hpp"

namespace twistcert {

/// A model definition that fails validation.
class ModelError : public InputError {
 public:
  using InputError::InputError;
};

/// An automorphism phi of B_n given on generators, with phi o phi = id.
/// The constructor checks that every braid relator maps to the identity and
/// that phi(phi(s_i)) = s_i.
class InvolutiveAutomorphism {
 public:
  InvolutiveAutomorphism(int strands, Binding images);

  int strands() const { return strands_; }
  const Binding& images() const { return images_; }

  Word apply(const Word& w) const;
  BraidElement apply(const BraidElement& b) const;

 private:
  int strands_;
  Binding images_;  // includes the half twist D
};

/// Relators of the standard presentation of B_n, as words in s1..s{n-1}.
std::vector<Word> braid_relators(int n);

/// (base, flip) in B_n x| Z/2; the nontrivial flip acts through phi.
struct ExtendedElement {
  BraidElement base;
  bool flip = false;

  friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;
};

/// (a, b) stands for y^a f^b in <y, f | f y f^-1 = y^-1>.
struct DihedralElement {
  long long a = 0;
  long long b = 0;

  friend DihedralElement operator*(const DihedralElement& u, const DihedralElement& v) {
    return {u.a + (u.b % 2 == 0 ? v.a : -v.a), u.b + v.b};
  }
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

using Element = std::variant<BraidElement, ExtendedElement, DihedralElement>;

/// A group in which word equality is decidable. Words are over alphabet().
class Model {
 public:
  virtual ~Model() = default;

  virtual const std::string& id() const = 0;
  virtual const Alphabet& alphabet() const = 0;
  virtual Element evaluate(const Word& w) const = 0;
  /// Generators known to square to the identity.
  virtual std::vector<std::string> involutions() const { return {}; }

  Element evaluate(const Word& w, const Binding& binding) const;
  bool equals(const Word& u, const Word& v) const { return evaluate(u) == evaluate(v); }

  /// Facts that justify mapping this model into a mapping class group. Each
  /// verified identity in the model holds in every such image.
  const std::vector<std::string>& soundness() const { return soundness_; }

 protected:
  explicit Model(std::vector<std::string> soundness) : soundness_(std::move(soundness)) {}
  void check_letters(const Word& w) const;

 private:
  std::vector<std::string> soundness_;
};

std::string render(const Element& e);

class BraidModel final : public Model {
 public:
  BraidModel(std::string id, int strands, std::vector<std::string> soundness);

  const std::string& id() const override { return id_; }
  const Alphabet& alphabet() const override { return alphabet_; }
  using Model::evaluate;
  Element evaluate(const Word& w) const override;
  int strands() const { return strands_; }

 private:
  std::string id_;
  int strands_;
  Alphabet alphabet_;
};

/// B_n x| Z/2 where the extra generator r acts by phi.
class ExtendedModel final : public Model {
 public:
  ExtendedModel(std::string id, InvolutiveAutomorphism phi, std::vector<std::string> soundness);

  const std::string& id() const override { return id_; }
  const Alphabet& alphabet() const override { return alphabet_; }
  using Model::evaluate;
  Element evaluate(const Word& w) const override;
  std::vector<std::string> involutions() const override { return {"r"}; }

  const InvolutiveAutomorphism& automorphism() const { return phi_; }
  ExtendedElement multiply(const ExtendedElement& u, const ExtendedElement& v) const;

 private:
  std::string id_;
  InvolutiveAutomorphism phi_;
  Alphabet alphabet_;
};

/// The group <y, f | f y f^-1 = y^-1> in exponent coordinates.
class DihedralModel final : public Model {
 public:
  explicit DihedralModel(std::vector<std::string> soundness);

  const std::string& id() const override { return id_; }
  const Alphabet& alphabet() const override { return alphabet_; }
  using Model::evaluate;
  Element evaluate(const Word& w) const override;

 private:
  std::string id_ = "ZsemiZ";
  Alphabet alphabet_{{"y", "f"}};
};

/// Builds B_n x| Z/2 from a validated automorphism. Validation happens when
/// the automorphism is constructed; this throws ModelError when phi was built
/// for a different strand count.
std::shared_ptr<const ExtendedModel> make_extension(const BraidModel& base, InvolutiveAutomorphism phi,
                                                    std::string id, std::vector<std::string> soundness = {});

/// Registry ids: B3, B4, B3xZ2, B4xZ2, ZsemiZ. Throws InputError otherwise.
const Model& find_model(std::string_view id);
std::vector<std::string> model_ids();

bool ext_equals(const Word& u, const Word& v, const ExtendedModel& model, const Binding& binding);
/// Words over y and f only.
bool dihedral_equals(const Word& u, const Word& v);
DihedralElement dihedral_coordinates(const Word& w);

}  // namespace twistcert
