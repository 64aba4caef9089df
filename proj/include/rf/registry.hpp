#pragma once

#include "rf/antiregular.hpp"
#include "rf/lattices.hpp"
#include "rf/quadform.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rf::forms {

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct Aut0Label {
    enum class Kind { Named, Product, Extension, Split, Unspecified };
    Kind kind = Kind::Unspecified;
    std::string text;                  // group name, extension sequence or split description
    std::vector<std::string> factors;  // for products

    std::string render() const;
};
std::string to_string(Aut0Label::Kind k);

// Antiregular map v -> c * conj(w) on the coordinates of a toric ambient.
// Coordinates absent from images are sent to their own conjugate.
struct CoordinateStructure {
    std::string ambient;  // Fabc, Rmn, S1 or Schwarzenberger
    std::vector<int> ambient_params;
    std::map<std::string, std::string> images;

    std::string formula() const;
};

struct FormDescriptor {
    std::string id;  // "Fabc(0,1,-1)/G", "Q3/Q(3,2)"
    std::optional<FamilyId> family;
    std::string threefold;  // key of a named threefold when family is empty
    std::string tag;
    std::string name;
    std::string description;
    Tri has_real_points = Tri::Unknown;
    Tri rational = Tri::Unknown;
    Aut0Label aut0;
    std::optional<CoordinateStructure> real_structure;
    std::optional<std::vector<Rational>> quadric;  // diagonal form for Q^{r,s}
};

struct FormList {
    std::string source;  // family name or threefold key
    bool complete = false;
    std::vector<std::string> notes;
    std::vector<FormDescriptor> forms;
};

struct TorusShape {
    int p = 0;
    int q = 0;
    int r = 0;

    int dimension() const { return 2 * p + q + r; }
    // R_{C/R}(G_m)^p x (S^1)^q x G_{m,R}^r
    std::string label() const;
    friend bool operator==(const TorusShape&, const TorusShape&) = default;
};

enum class LinkType { I, II, III, IV, Divisorial, None };
std::string to_string(LinkType t);

struct LinkDescriptor {
    std::string source;  // form id
    LinkType type = LinkType::None;
    int count = 0;
    std::string target;
    std::string description;
    std::optional<std::string> witness;  // key of the witness record
    std::optional<std::string> witness_formula;
};

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct StructureVerdict {
    bool valid = false;
    std::string method;  // "monomial" or "gluing"
    std::string detail;
    std::optional<InvolutionVerdict> involution;
};

struct WitnessVerdict {
    std::string witness;
    bool valid = false;
    std::vector<Check> checks;
    std::optional<Signature> signature;
    std::vector<std::string> inverse;  // constructed inverse, when one is built
};

class Registry {
public:
    // Reads the JSON file and verifies it against the SHA-256 digest stored in
    // path + ".sha256"; throws VerificationError on a mismatch.
    static Registry load(const std::string& path);
    // Parses JSON text without a checksum.
    static Registry from_text(const std::string& text);

    FormList forms_of(const FamilyId& family) const;
    FormList forms_of_threefold(const std::string& key) const;
    std::vector<std::string> threefold_keys() const;
    FormDescriptor find_form(const std::string& id) const;
    std::vector<LinkDescriptor> links_from(const FormDescriptor& form) const;
    WitnessVerdict verify_witness(const LinkDescriptor& link) const;
    WitnessVerdict verify_witness(const std::string& key) const;
    std::vector<std::string> witness_keys() const;

    std::string digest() const { return digest_; }
    int version() const;

    struct Data;

private:
    std::shared_ptr<const Data> data_;
    std::string digest_;
};

// Process-wide registry read from the default data file on first use.
const Registry& default_registry();

FormList forms_of(const FamilyId& family);
std::vector<LinkDescriptor> links_from(const FormDescriptor& form);
WitnessVerdict verify_witness(const LinkDescriptor& link);

// Real tori of dimension d as triples (p, q, r) with 2p + q + r = d.
std::vector<TorusShape> torus_forms(int d);
// d-dimensional tori of Bir(P^d) are conjugate exactly when they are isomorphic.
bool tori_conjugate(const TorusShape& t1, const TorusShape& t2);

// Toric ambient with the given coordinate structure and the equations cutting
// out the variety inside it.
struct Ambient {
    GradedAmbient graded;
    std::vector<std::vector<std::string>> groups;  // coordinate blocks for rendering
    std::vector<Poly> equations;
};
Ambient make_ambient(const std::string& kind, const std::vector<int>& params);

MonomialAntiregularMap to_map(const Ambient& ambient, const CoordinateStructure& s);
StructureVerdict verify_involution(const CoordinateStructure& s);

std::string sha256_hex(const std::string& bytes);

}  // namespace rf::forms
