#include "frit/corpus.hpp"

namespace frit {

std::vector<CorpusEntry> standard_corpus(const BoxDomain& box, std::uint64_t seed) {
    std::vector<CorpusEntry> corpus;
    corpus.reserve(5);

    {
        FieldParams p;
        p.sigma_fraction = 1.0 / 32.0;
        corpus.push_back({"gaussian_bump", FieldKind::gaussian_bump,
                          make_test_field(box, FieldKind::gaussian_bump, p)});
    }
    {
        FieldParams p;
        p.bump_count = 3;
        p.seed = seed;
        corpus.push_back({"multi_bump", FieldKind::multi_bump,
                          make_test_field(box, FieldKind::multi_bump, p)});
    }
    {
        FieldParams p;
        p.indicator_side_fraction = 1.0 / 8.0;
        corpus.push_back({"indicator_cube", FieldKind::indicator_cube,
                          make_test_field(box, FieldKind::indicator_cube, p)});
    }
    {
        FieldParams p;
        p.band_limit = 4;
        p.seed = seed;
        corpus.push_back({"band_limited_random", FieldKind::band_limited_random,
                          make_test_field(box, FieldKind::band_limited_random, p)});
    }
    {
        FieldParams p;
        p.mode = box.n == 1 ? std::array<int, 3>{1, 0, 0} : std::array<int, 3>{1, 2, 0};
        corpus.push_back({"single_mode", FieldKind::single_mode,
                          make_test_field(box, FieldKind::single_mode, p)});
    }
    return corpus;
}

const char* corpus_id() { return "corpus-v1"; }

}  // namespace frit
