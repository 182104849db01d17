#pragma once

#include <string>
#include <vector>

#include "llzb/group.hpp"

namespace llzb {

/// Named group constructors. Every entry is checked against a certification
/// list (order, center, Sylow fingerprints, ...) before it is returned.
PermGroup catalog_group(const std::string& name);
bool catalog_has(const std::string& name);
std::vector<std::string> catalog_patterns();

PermGroup cyclic_group(long n);
PermGroup abelian_group(const std::vector<long>& factors);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup dihedral_group(long order);
PermGroup quaternion_group(long order);
PermGroup semidihedral_group(long order);
PermGroup modular_group(long p, int d);         // M_{p^d}
PermGroup central_product_w(long p, int d);     // W_{p^d}
PermGroup mna21_group();                        // MNA(2,1)
PermGroup c4_semi_c4_group();                   // C4 : C4
PermGroup sl2(long q);
PermGroup gl2(long q);
PermGroup psl2(long q);
PermGroup pgl2(long q);
PermGroup gl32();
PermGroup psl33();
PermGroup mathieu10();
PermGroup double_cover_s5();                    // SmallGroup(240,89)
PermGroup agl1(long q);                         // F_q : F_q^x
PermGroup c3c3_sd16();
PermGroup a4_c4();

/// Group definition JSON: {"name": str, "degree": int, "generators": [[...]]}
/// with 1-indexed image arrays.
PermGroup group_from_json_text(const std::string& text, std::string* name_out);

}  // namespace llzb
