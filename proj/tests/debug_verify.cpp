// scratch driver, not part of the build
#include <iostream>
#include <numeric>

#include "cycbound/bounds.hpp"
#include "cycbound/tableau.hpp"

using namespace cycbound;

int main() {
    TableauParams base;
    base.kind = TableauKind::BlockTrain;
    base.n = 29;
    base.ell = 7;
    base.m = 2;
    base.r = 1;
    base.s = 5;
    SymVec R = synthetic_vector(base);
    std::cout << "R = " << R.to_string() << "\n";
    auto members = enumerate_resolutions(R, 1 << 20);
    int shown = 0;
    for (const auto& u0 : members) {
        // replicate the enumerated pipeline manually
        SymVec w = u0;
        TableauParams pe = base;
        bool staircased = false;
        while (true) {
            int ip = primary_pivot(w);
            if (ip <= pe.r) break;
            if (pe.s == 0) { staircased = true; break; }
            w = w.rotated_right(-(pe.m + pe.r));
            pe.ell += pe.m + pe.r;
            pe.s -= 1;
        }
        if (staircased || pe.s == 0) continue;
        Tableau tb;
        try {
            tb = build_tableau(w, pe, true);
        } catch (const NotFound&) {
            continue;
        }
        TableauCheck chk = check_tableau(tb);
        int target = bound_I_value(base.ell, base.m, base.r, base.s, base.n);
        if ((!chk.ok || chk.deletions < target) && shown < 1) {
            std::cout << "v0 = " << u0.to_string() << "\n";
            std::cout << "w  = " << w.to_string() << " ell=" << pe.ell << " s=" << pe.s
                      << " ip=" << tb.i_primary << " isec=" << tb.i_secondary
                      << " ext=" << tb.extensions << "\n";
            std::cout << "rows=" << chk.rows << " discarded=" << chk.discarded
                      << " ok=" << chk.ok << " deletions=" << chk.deletions << "\n";
            std::cout << format_tableau(tb);
            // rebuild the kept matrix and trace the procedure
            auto discards = discard_rows(tb);
            std::vector<char> drop(tb.shifts.size(), 0);
            for (int i : discards) drop[static_cast<size_t>(i)] = 1;
            SymMatrix kept;
            for (size_t i = 0; i < tb.shifts.size(); ++i)
                if (!drop[i]) kept.rows.push_back(tb.t.rows[i]);
            SingletonResult sr = singleton_procedure(kept, SingletonMode::Greedy);
            std::cout << "direct procedure: success=" << sr.success
                      << " steps=" << sr.order.size() << "\n";
            for (auto [r, c] : sr.order) std::cout << "  del row " << r << " col " << c << "\n";
            ++shown;
        }
    }
    return 0;
}
