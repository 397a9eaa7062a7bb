// Bounded exhaustive search, over Z/2-sets with at most six elements in
// total and the unordered-pair functor, for a relation that passes the
// regular check but admits no equivariant witness map R -> F(R). The
// smallest instance found (by total carrier size, then relation size) is
// written as two system files and a relation file.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "regbisim/io.hpp"

using namespace regbisim;

int main(int argc, char** argv) {
    CLI::App app{"Search for a regular AM-bisimulation without an AM witness"};
    std::string out_dir = ".";
    std::size_t max_total = 6;
    app.add_option("--out", out_dir, "directory for the fixture files")->capture_default_str();
    app.add_option("--max-total", max_total, "bound on |X| + |Y|")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const ElemCategory cat(FiniteGroup::cyclic(2));
    const auto f = ElemFunctor::upair();
    const auto xs = small_objects(cat, max_total, "x");
    const auto ys = small_objects(cat, max_total, "y");
    std::size_t examined = 0;

    for (std::size_t total = 2; total <= max_total; ++total) {
        for (const auto& x : xs) {
            for (const auto& y : ys) {
                if (x.size() + y.size() != total || x.size() == 0 || y.size() == 0) continue;
                const auto alphas = all_morphisms(cat, x, cat.apply(f, x));
                const auto betas = all_morphisms(cat, y, cat.apply(f, y));
                const auto prod = cat.product(x, y);
                const auto orbits = cat.orbits(prod.object);
                for (std::size_t rsize = 1; rsize <= orbits.size(); ++rsize) {
                    for (std::size_t mask = 1; mask < (std::size_t{1} << orbits.size()); ++mask) {
                        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != rsize) continue;
                        std::vector<std::pair<Value, Value>> pairs;
                        for (std::size_t o = 0; o < orbits.size(); ++o)
                            if (mask >> o & 1)
                                for (const auto& p : orbits[o]) pairs.emplace_back(p[0], p[1]);
                        const auto r = relation_from_pairs(cat, x, y, pairs);
                        for (const auto& alpha : alphas) {
                            const Coalgebra<ElemCategory> a(cat, f, alpha);
                            for (const auto& beta : betas) {
                                const Coalgebra<ElemCategory> b(cat, f, beta);
                                ++examined;
                                if (!is_regular_am_bisimulation(cat, r, a, b).verdict) continue;
                                if (am_witness(cat, r, a, b)) continue;
                                const ElemSystem sa{cat, "upair", {}, a};
                                const ElemSystem sb{cat, "upair", {}, b};
                                write_json(out_dir + "/separation_left.json", system_to_json(sa));
                                write_json(out_dir + "/separation_right.json", system_to_json(sb));
                                write_json(out_dir + "/separation_relation.json", relation_to_json(r));
                                std::cout << "found after " << examined << " candidates: |X|=" << x.size()
                                          << " |Y|=" << y.size() << " |R|=" << pairs.size() << "\n";
                                return 0;
                            }
                        }
                    }
                }
            }
        }
    }
    std::cout << "no instance within the bound (" << examined << " candidates)\n";
    return 1;
}
