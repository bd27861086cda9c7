// Prints exact Banzhaf indices for a few small games, including one with
// rational weights and one built from a SUBSET SUM instance.

#include <iostream>

#include "wvg/wvg.hpp"

int main()
{
    using namespace wvg;

    for (const char* text : {"6; 5, 4, 1", "22; 18, 9, 4, 2, 1", "3.5; 2.5, 1.5, 1, 1", "32; 20, 10, 10, 5, 1, 1, 1"}) {
        const WeightedGame game = parse_game(text);
        const ComputeResult res = compute(game, ComputeOptions{.crosscheck = true});
        std::cout << "[" << text << "]  backend=" << to_string(res.backend) << '\n';
        for (std::size_t i = 0; i < game.size(); ++i)
            std::cout << "  player " << i + 1 << ": eta=" << res.report.swings[i]
                      << "  beta=" << to_fraction_string(res.report.banzhaf[i]) << '\n';
    }

    const SubsetSumInstance yes{{1, 2}, 2};
    const WeightedGame reduction = gen_reduction(yes);
    const ComputeResult res = compute(reduction);
    std::cout << "reduction " << to_text(reduction) << ": unit player eta="
              << res.report.swings[reduction_unit_player] << '\n';
}
