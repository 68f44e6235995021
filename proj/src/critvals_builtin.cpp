#include "burnscan/mosum.hpp"

namespace burnscan {

// Generated by `burnscan simulate critvals --h 0.15,0.23,0.45
// --alpha 0.01,0.025,0.05,0.10 --out data/critical_values.txt`
// (grid 322, 200000 replicates, seed 20220423). Keep in sync with that file.
const CriticalValueTable& CriticalValueTable::builtin() {
    static const CriticalValueTable table(
        {
            {0.15, 0.010, 1.29363701},
            {0.15, 0.025, 1.20190048},
            {0.15, 0.050, 1.12469101},
            {0.15, 0.100, 1.03939110},
            {0.23, 0.010, 1.46240675},
            {0.23, 0.025, 1.34609602},
            {0.23, 0.050, 1.25257249},
            {0.23, 0.100, 1.14900193},
            {0.45, 0.010, 1.61392315},
            {0.45, 0.025, 1.46994350},
            {0.45, 0.050, 1.34968001},
            {0.45, 0.100, 1.22161564},
        },
        "1");
    return table;
}

}  // namespace burnscan
