#include "bgc/corpus.hpp"

#include "bgc/errors.hpp"
#include "bgc/geometry.hpp"

namespace bgc {

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random invertible matrix together with its inverse, as a short product of
// elementary operations with small entries.
std::pair<QMatrix, QMatrix> random_unimodular(std::mt19937_64& rng, int n) {
    QMatrix p = QMatrix::identity(n);
    QMatrix pinv = QMatrix::identity(n);
    if (n <= 1) return {p, pinv};
    int ops = 2 * n;
    for (int t = 0; t < ops; ++t) {
        int i = rand_int(rng, 0, n - 1);
        int j = rand_int(rng, 0, n - 1);
        if (i == j) continue;
        static const int coeffs[4] = {-2, -1, 1, 2};
        Rational cval(coeffs[rand_int(rng, 0, 3)]);
        // row_i += c row_j on p; the inverse composes on the other side.
        QMatrix e = QMatrix::identity(n);
        e.set(i, j, cval);
        QMatrix einv = QMatrix::identity(n);
        einv.set(i, j, -cval);
        p = e * p;
        pinv = pinv * einv;
    }
    return {p, pinv};
}

SingleComplex random_single_nonzero(std::mt19937_64& rng, int max_len, int max_dim) {
    for (int tries = 0; tries < 64; ++tries) {
        SingleComplex s = random_single_complex(rng, max_len, max_dim);
        int total = 0;
        for (int d : s.dims) total += d;
        if (total > 0) return s;
    }
    throw GenerationExhausted("random single complex");
}

BigradedComplex random_tensor_double(std::mt19937_64& rng) {
    SingleComplex e = random_single_nonzero(rng, 3, 3);
    SingleComplex f = random_single_nonzero(rng, 3, 2);
    return tensor_product(e, f);
}

BigradedComplex random_conjugated(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        BigradedComplex base = random_tensor_double(rng);
        std::vector<Bidegree> candidates;
        for (const auto& [b, n] : base.dims())
            if (b.q >= 1 && base.dim(b.p + 1, b.q - 1) > 0) candidates.push_back(b);
        if (candidates.empty()) continue;
        for (int inner = 0; inner < 8; ++inner) {
            Bidegree b = candidates[rand_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
            QMatrix phi(base.dim(b.p + 1, b.q - 1), base.dim(b));
            for (int i = 0; i < phi.rows(); ++i)
                for (int j = 0; j < phi.cols(); ++j)
                    if (rand_int(rng, 0, 2) == 0)
                        phi.set(i, j, Rational(rand_int(rng, -2, 2)));
            if (phi.is_zero()) continue;
            BigradedComplex out = conjugate_single_block(base, b.p, b.q, phi);
            bool has_d2m1 = false;
            for (const auto& [bb, n] : out.dims()) {
                (void)n;
                if (!out.op(OpKind::d2m1, bb.p, bb.q).is_zero()) has_d2m1 = true;
            }
            if (!has_d2m1) continue;
            if (!out.is_valid())
                throw CrossCheckFailure("conjugated complex fails validation");
            return out;
        }
    }
    throw GenerationExhausted("conjugated double complex with nonzero D2m1");
}

BigradedComplex geometry_instance(int which) {
    switch (which % 9) {
        case 0: return build_vertical_complex(0);
        case 1: return build_vertical_complex(1);
        case 2: return build_vertical_complex(2);
        case 3: return build_product_complex(circle_model(), 0);
        case 4: return build_product_complex(circle_model(), 1);
        case 5: return build_product_complex(point_model(), 2);
        case 6: return example_nz();
        case 7: return example_torus();
        default: return example_interval2();
    }
}

}  // namespace

SingleComplex random_single_complex(std::mt19937_64& rng, int max_len, int max_dim) {
    int len = rand_int(rng, 2, max_len);
    SingleComplex s;
    s.dims.resize(len);
    for (int i = 0; i < len; ++i) s.dims[i] = rand_int(rng, 0, max_dim);

    // Rank profile: r[i] = rank of d_i. The normal form below maps the last
    // r[i] source coordinates onto the first r[i] target ones, so d d = 0
    // needs r[i-1] + r[i] <= dims[i]; the cap enforces it inductively.
    std::vector<int> r(len, 0);
    for (int i = 0; i + 1 < len; ++i) {
        int prev = i > 0 ? r[i - 1] : 0;
        int cap = std::min(s.dims[i] - prev, s.dims[i + 1]);
        r[i] = cap <= 0 ? 0 : rand_int(rng, 0, cap);
    }

    s.d.resize(len - 1);
    for (int i = 0; i + 1 < len; ++i) {
        QMatrix d(s.dims[i + 1], s.dims[i]);
        // Last r[i] source coordinates map onto the first r[i] target ones.
        for (int t = 0; t < r[i]; ++t) d.set(t, s.dims[i] - r[i] + t, Rational(1));
        s.d[i] = std::move(d);
    }
    // Conjugate by random changes of basis per degree.
    std::vector<std::pair<QMatrix, QMatrix>> bases(len);
    for (int i = 0; i < len; ++i) bases[i] = random_unimodular(rng, s.dims[i]);
    for (int i = 0; i + 1 < len; ++i) s.d[i] = bases[i + 1].first * s.d[i] * bases[i].second;
    s.check();
    return s;
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int count) {
    if (count < 1) throw InvalidDimensions("corpus count must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    out.reserve(count);
    int geo = 0;
    for (int i = 0; i < count; ++i) {
        switch (i % 4) {
            case 0: out.push_back({'a', random_tensor_double(rng)}); break;
            case 1: out.push_back({'b', regrade_to_d01_zero(random_tensor_double(rng))}); break;
            case 2: out.push_back({'c', random_conjugated(rng)}); break;
            default: out.push_back({'d', geometry_instance(geo++)}); break;
        }
        if (!out.back().complex.is_valid())
            throw CrossCheckFailure("corpus emitted an invalid complex");
    }
    return out;
}

}  // namespace bgc
