/// Regenerates the bundled datum and sub-datum files under fixtures/.
///
/// Usage: make_fixtures <output-directory>
///
/// Everything is produced through the library's own constructors and save
/// functions, so the files always match the current schema.  The invalid_*
/// sub-datum files each construct fine but fail embedding validation; the
/// file name records the first condition they are designed to violate.

#include <cstdio>
#include <optional>
#include <string>

#include "qnichols/rootdata.hpp"

using namespace qnichols;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <output-directory>\n", argv[0]);
        return 2;
    }
    const std::string dir = std::string(argv[1]) + "/";
    const IntMat i3 = IntMat::identity(3);

    const RootDatum a1 = builtin_datum("A", 1);
    const RootDatum a2 = builtin_datum("A", 2);
    const RootDatum a3 = builtin_datum("A", 3);
    save_root_datum(a1, dir + "a1.json");
    save_root_datum(a2, dir + "a2.json");
    save_root_datum(a3, dir + "a3.json");
    save_root_datum(direct_sum(a1, a1), dir + "a1a1.json");
    save_root_datum(direct_sum(a2, a1), dir + "a2a1.json");

    // A symmetric generalized Cartan matrix of affine type in the corner:
    // the adjoint orbits in the corresponding algebra are infinite, which
    // exercises the orbit cap and the partial-result reporting.
    const IntMat wdot =
        IntMat::from_rows({{2, -2, -1}, {-2, 2, 0}, {-1, 0, 2}});
    const RootDatum wild({"1", "2", "3"}, wdot, 3, 3, i3, i3, wdot);
    save_root_datum(wild, dir + "affine.json");

    const SubRootDatum golden = levi_subdatum(a3, {0, 1});
    save_root_datum(golden.sub(), dir + "a3_levi12.json");
    save_sub_root_datum(golden, dir + "sub_a2_in_a3.json", "a3.json",
                        "a3_levi12.json");

    save_sub_root_datum(levi_subdatum(a3, {0, 1, 2}), dir + "sub_identity_a3.json",
                        "a3.json", "a3.json");

    const SubRootDatum j1 = levi_subdatum(a1, {});
    save_root_datum(j1.sub(), dir + "empty_rank1.json");
    save_sub_root_datum(j1, dir + "sub_jempty_a1.json", "a1.json",
                        "empty_rank1.json");
    const SubRootDatum j2 = levi_subdatum(a2, {});
    save_root_datum(j2.sub(), dir + "empty_rank2.json");
    save_sub_root_datum(j2, dir + "sub_jempty_a2.json", "a2.json",
                        "empty_rank2.json");

    save_sub_root_datum(left_summand_subdatum(a1, a1), dir + "sub_a1_in_a1a1.json",
                        "a1a1.json", "a1.json");
    save_sub_root_datum(left_summand_subdatum(a2, a1), dir + "sub_a2_in_a2a1.json",
                        "a2a1.json", "a2.json");

    const SubRootDatum wj = levi_subdatum(wild, {0, 1});
    save_root_datum(wj.sub(), dir + "affine_j12.json");
    save_sub_root_datum(wj, dir + "sub_affine.json", "affine.json",
                        "affine_j12.json");

    const RootDatum& gs = golden.sub();

    // (i): two sub nodes mapped to the same ambient node.
    save_sub_root_datum(SubRootDatum(a3, gs, {0, 0}, i3, i3, std::nullopt),
                        dir + "invalid_i.json", "a3.json", "a3_levi12.json");

    // (ii): the sub datum carries a doubled dot form.  Its own consistency
    // check still holds (the Cartan matrix is unchanged), but the form no
    // longer restricts from the ambient one.
    const RootDatum scaled({"1", "2"},
                           IntMat::from_rows({{4, -2}, {-2, 4}}), 3, 3, i3,
                           gs.i1(), gs.i2());
    save_root_datum(scaled, dir + "a3_levi12_scaled.json");
    save_sub_root_datum(SubRootDatum(a3, scaled, {0, 1}, i3, i3, std::nullopt),
                        dir + "invalid_ii.json", "a3.json",
                        "a3_levi12_scaled.json");

    // (iii): sY has a torsion cokernel (also breaks (iv), which uses sY).
    save_sub_root_datum(
        SubRootDatum(a3, gs, {0, 1},
                     IntMat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}), i3,
                     std::nullopt),
        dir + "invalid_iii.json", "a3.json", "a3_levi12.json");

    // (iv): sY is unimodular but no longer preserves the pairing.
    save_sub_root_datum(
        SubRootDatum(a3, gs, {0, 1},
                     IntMat::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}), i3,
                     std::nullopt),
        dir + "invalid_iv.json", "a3.json", "a3_levi12.json");

    // (v): a spurious extra X'' vector makes the ranks not add up.
    IntMat xpp(3, 1);
    xpp.at(0, 0) = 1;
    xpp.at(2, 0) = 1;
    save_sub_root_datum(SubRootDatum(a3, gs, {0, 1}, i3, i3, xpp),
                        dir + "invalid_v.json", "a3.json", "a3_levi12.json");

    // (vi): i2' of the first node grows a stray third coordinate, invisible
    // to the sub datum's own consistency check.
    IntMat badi2 = gs.i2();
    badi2.at(2, 0) = 5;
    const RootDatum bad({"1", "2"}, gs.dot(), 3, 3, i3, gs.i1(), badi2);
    save_root_datum(bad, dir + "a3_levi12_badi2.json");
    save_sub_root_datum(SubRootDatum(a3, bad, {0, 1}, i3, i3, std::nullopt),
                        dir + "invalid_vi.json", "a3.json",
                        "a3_levi12_badi2.json");

    return 0;
}
