#include "collapsar/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace collapsar {

mpq_class average_edge_degree(const Complex3& c) {
    const FVector fv = f_vector(c);
    mpq_class q(static_cast<long>(6 * fv.f3), static_cast<long>(fv.f3 + fv.f0));
    q.canonicalize();
    return q;
}

namespace {

VarianceReport variance_of(const std::map<int, long long>& histogram, const mpq_class& avg) {
    VarianceReport r;
    r.average_degree = avg;
    r.degree_histogram = histogram;
    long total = 0;
    mpq_class acc = 0;
    for (const auto& [deg, count] : histogram) {
        total += static_cast<long>(count);
        mpq_class diff = avg - deg;
        acc += diff * diff * static_cast<long>(count);
    }
    r.variance = acc / total;
    r.variance.canonicalize();
    return r;
}

}  // namespace

VarianceReport edge_variance(const Complex3& c) {
    const EdgeTable et = edge_table(c);
    std::map<int, long long> histogram;
    for (int d : et.degree) ++histogram[d];
    return variance_of(histogram, average_edge_degree(c));
}

VarianceReport edge_variance_from_histogram(const std::map<int, long long>& histogram) {
    long total = 0, weighted = 0;
    for (const auto& [deg, count] : histogram) {
        total += static_cast<long>(count);
        weighted += static_cast<long>(deg) * static_cast<long>(count);
    }
    if (total == 0) throw DomainError("empty degree histogram");
    mpq_class avg(weighted, total);
    avg.canonicalize();
    return variance_of(histogram, avg);
}

std::string rational_to_decimal(const mpq_class& q, int places) {
    mpz_class num = q.get_num(), den = q.get_den();
    const bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    // round half away from zero
    mpz_class scaled = (num * scale * 2 + den) / (den * 2);
    mpz_class integral = scaled / scale, frac = scaled % scale;
    std::string fs = frac.get_str();
    fs.insert(0, static_cast<size_t>(places) - fs.size(), '0');
    return (neg ? "-" : "") + integral.get_str() + "." + fs;
}

std::string VarianceReport::to_json_text() const {
    std::ostringstream out;
    out << "{\"average_degree\":{\"num\":" << average_degree.get_num()
        << ",\"den\":" << average_degree.get_den()
        << ",\"decimal\":" << rational_to_decimal(average_degree, 5) << "}"
        << ",\"variance\":{\"num\":" << variance.get_num() << ",\"den\":" << variance.get_den()
        << ",\"decimal\":" << rational_to_decimal(variance, 5) << "}"
        << ",\"degree_histogram\":{";
    bool first = true;
    for (const auto& [deg, count] : degree_histogram) {
        if (!first) out << ",";
        first = false;
        out << "\"" << deg << "\":" << count;
    }
    out << "}}";
    return out.str();
}

namespace {

// Full closure of a set of maximal faces, one sorted-face set per dimension.
std::vector<std::set<std::vector<int>>> closure_by_dimension(
    const std::vector<std::vector<int>>& maximal_faces) {
    std::vector<std::set<std::vector<int>>> faces;
    for (const auto& f_in : maximal_faces) {
        std::vector<int> f = f_in;
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) continue;
        const size_t k = f.size();
        if (faces.size() < k) faces.resize(k);
        // every non-empty subset
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            faces[sub.size() - 1].insert(std::move(sub));
        }
    }
    return faces;
}

// Rank over F2 of the boundary map from k-faces to (k-1)-faces, rows as bitsets.
long long f2_boundary_rank(const std::set<std::vector<int>>& kfaces,
                           const std::set<std::vector<int>>& km1faces) {
    if (kfaces.empty() || km1faces.empty()) return 0;
    std::vector<std::vector<int>> cols(km1faces.begin(), km1faces.end());
    auto col_index = [&](const std::vector<int>& f) {
        return static_cast<size_t>(
            std::lower_bound(cols.begin(), cols.end(), f) - cols.begin());
    };
    const size_t words = (cols.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(kfaces.size());
    for (const auto& f : kfaces) {
        std::vector<std::uint64_t> row(words, 0);
        for (size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> sub;
            for (size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            const size_t ci = col_index(sub);
            row[ci / 64] ^= (1ull << (ci % 64));
        }
        rows.push_back(std::move(row));
    }
    // Gaussian elimination
    long long rank = 0;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols.size() && pivot_row < rows.size(); ++col) {
        const size_t w = col / 64;
        const std::uint64_t bit = 1ull << (col % 64);
        size_t r = pivot_row;
        while (r < rows.size() && !(rows[r][w] & bit)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[pivot_row], rows[r]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != pivot_row && (rows[i][w] & bit))
                for (size_t j = 0; j < words; ++j) rows[i][j] ^= rows[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace

long long euler_characteristic(const std::vector<std::vector<int>>& maximal_faces) {
    const auto faces = closure_by_dimension(maximal_faces);
    long long chi = 0;
    for (size_t d = 0; d < faces.size(); ++d) {
        const long long n = static_cast<long long>(faces[d].size());
        chi += (d % 2 == 0) ? n : -n;
    }
    return chi;
}

long long euler_characteristic(const Complex3& c) {
    const FVector fv = f_vector(c);
    return fv.f0 - fv.f1 + fv.f2 - fv.f3;
}

long long euler_characteristic(const TwoComplex& tc) { return tc.euler_characteristic(); }

long long F2Homology::alternating_sum() const {
    long long s = 0;
    for (size_t d = 0; d < betti.size(); ++d)
        s += (d % 2 == 0) ? betti[d] : -betti[d];
    return s;
}

F2Homology f2_homology(const std::vector<std::vector<int>>& maximal_faces) {
    const auto faces = closure_by_dimension(maximal_faces);
    const size_t dims = faces.size();
    F2Homology h;
    if (dims == 0) return h;
    std::vector<long long> rank(dims + 1, 0);
    for (size_t k = 1; k < dims; ++k) rank[k] = f2_boundary_rank(faces[k], faces[k - 1]);
    h.betti.resize(dims);
    for (size_t k = 0; k < dims; ++k) {
        const long long fk = static_cast<long long>(faces[k].size());
        // betti_k = dim ker d_k - rank d_{k+1}
        h.betti[k] = (fk - rank[k]) - (k + 1 < dims ? rank[k + 1] : 0);
    }
    return h;
}

F2Homology f2_homology(const Complex3& c) {
    std::vector<std::vector<int>> faces;
    faces.reserve(c.facets().size());
    for (const Facet& f : c.facets()) faces.emplace_back(f.begin(), f.end());
    return f2_homology(faces);
}

F2Homology f2_homology(const TwoComplex& tc) { return f2_homology(tc.alive_faces()); }

bool is_k_neighbourly(const Complex3& c, int k) {
    if (k != 2 && k != 3) throw DomainError("neighbourliness is checked for k = 2 or 3");
    const FVector fv = f_vector(c);
    const long long v = fv.f0;
    const long long binom = k == 2 ? v * (v - 1) / 2 : v * (v - 1) * (v - 2) / 6;
    return (k == 2 ? fv.f1 : fv.f2) == binom;
}

ObstructionBoundsReport obstruction_size_bounds(const TwoComplex& tc) {
    ObstructionBoundsReport r;
    r.f0 = tc.alive_vertices();
    r.f1 = tc.alive_edges();
    r.f2 = tc.alive_triangles();
    r.triangles_vs_edges_ok = 3 * r.f2 >= 2 * r.f1 + 3;
    r.triangles_vs_vertices_ok = r.f2 >= 2 * r.f0 + 1;
    return r;
}

}  // namespace collapsar
