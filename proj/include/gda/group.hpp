#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gda/config.hpp"
#include "gda/error.hpp"

namespace gda {

using Elem = int;

// A finite group given by its full multiplication table.  Element 0 is the
// identity.  Immutable after construction; all structural data (inverses,
// commutator subgroup) is computed up front so instances can be shared
// across threads freely.
class GroupTable {
public:
    static constexpr Elem identity = 0;

    // Validates all group axioms; reports the first violated one together
    // with a witnessing triple.  Throws FormatError.
    static GroupTable from_rows(std::vector<std::vector<Elem>> rows);

    static GroupTable cyclic(int n);
    static GroupTable elementary_abelian(int p, int exponent);
    static GroupTable dihedral(int n);  // order 2n
    static GroupTable symmetric(int n);  // lexicographic one-line order
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

    int order() const { return k_; }
    Elem mul(Elem u, Elem v) const { return table_[static_cast<size_t>(u) * k_ + v]; }
    Elem inverse(Elem u) const { return inverse_[u]; }
    int element_order(Elem u) const;
    bool is_abelian() const { return abelian_; }

    // [T,T]: closure of all commutators; sorted, contains the identity.
    const std::vector<Elem>& commutator_subgroup() const { return commutator_; }
    bool in_commutator_subgroup(Elem u) const { return in_commutator_[u] != 0; }

    std::vector<Elem> centralizer(Elem u) const;

    // Independent generators (g, order) with each order dividing the
    // previous one; product of the cyclic factors is the whole group.
    // Throws PreconditionError on nonabelian input.
    std::vector<std::pair<Elem, int>> abelian_basis() const;
    // Coordinates of u with respect to abelian_basis().
    std::vector<int> abelian_coordinates(Elem u, const std::vector<std::pair<Elem, int>>& basis) const;

    int exponent() const;  // lcm of element orders

    bool same_table(const GroupTable& other) const {
        return k_ == other.k_ && table_ == other.table_;
    }

private:
    GroupTable() = default;
    void finalize();  // fills inverse_, abelian_, commutator_

    int k_ = 0;
    std::vector<Elem> table_;  // row-major k*k
    std::vector<Elem> inverse_;
    std::vector<Elem> commutator_;
    std::vector<char> in_commutator_;
    bool abelian_ = false;
};

using GroupRef = std::shared_ptr<const GroupTable>;

enum class MapKind { automorphism, antiautomorphism, neither };

// The result of classifying a self-map of a group.  `order` is 0 when the
// map is not bijective ("n/a").
struct GroupMap {
    std::vector<Elem> image;
    MapKind kind = MapKind::neither;
    bool also_automorphism = false;  // abelian groups: both laws hold
    int order = 0;
    std::string reason;  // set when kind == neither

    bool is_involutory_antiautomorphism() const {
        return kind == MapKind::antiautomorphism && order >= 1 && order <= 2;
    }
    Elem operator()(Elem u) const { return image[u]; }
};

// Constructor specs: cyclic:n, elab:p^k, dihedral:n, symmetric:n,
// product:spec1,spec2, table:<path>.
GroupTable build_group(const std::string& spec);
GroupRef build_group_ref(const std::string& spec);

// Parses "group-table v1" text.  Throws FormatError with the first violated
// axiom on invalid content.
GroupTable read_group_table(std::istream& in);
void write_group_table(std::ostream& out, const GroupTable& g);

GroupMap check_antiautomorphism(const GroupTable& g, const std::vector<Elem>& image);
GroupMap inversion_map(const GroupTable& g);
GroupMap identity_automorphism(const GroupTable& g);

// outer after inner, kinds multiplied (anti*anti = auto, mixed = anti).
GroupMap compose_maps(const GroupTable& g, const GroupMap& outer, const GroupMap& inner);

}  // namespace gda
