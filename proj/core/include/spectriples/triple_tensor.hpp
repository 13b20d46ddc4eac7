#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spectriples {

// Sparse triple-product tensor T^{i,j,k} = <e^i e^j, e^k> at a finite cutoff.
// Entries are stored once in canonical form i <= j (the integrand is symmetric
// in i and j), sorted by (i, j, k). Entries with |value| < threshold are
// dropped at assembly time.
class TripleTensor {
public:
    enum class Source { Exact, Mesh };

    struct Entry {
        int i, j, k;
        std::complex<double> value;
    };

    TripleTensor() = default;
    // Entries may be in any index order; they are canonicalized, sorted and
    // threshold-filtered here. Mirrored duplicates (i,j,k)/(j,i,k) must agree.
    TripleTensor(int cutoff, double volume, Source source, double threshold,
                 std::vector<double> eigenvalues, std::vector<Entry> entries);

    int cutoff() const { return cutoff_; }
    double volume() const { return volume_; }
    Source source() const { return source_; }
    double threshold() const { return threshold_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nonzero_count() const;  // counting (i,j,k) and (j,i,k) separately

    // Symmetrized lookup; zero for absent triples.
    std::complex<double> at(int i, int j, int k) const;

    bool is_real(double tol = 1e-12) const;

    // Dump format: one header line "N vol source threshold", then one line
    // "i j k re im" per nonzero entry including the (j,i,k) mirror, sorted
    // lexicographically. Reals are printed with %.17g so a round trip through
    // the file is bit-exact.
    void dump(std::ostream& os) const;
    std::string dump_string() const;
    static TripleTensor parse(std::istream& is);
    static TripleTensor parse_file(const std::string& path);
    void dump_file(const std::string& path) const;

private:
    std::int64_t key(int i, int j, int k) const;

    int cutoff_ = 0;
    double volume_ = 0.0;
    Source source_ = Source::Exact;
    double threshold_ = 0.0;
    std::vector<double> eigenvalues_;
    std::vector<Entry> entries_;  // canonical i <= j, sorted by (i,j,k)
};

std::string to_string(TripleTensor::Source source);

}  // namespace spectriples
