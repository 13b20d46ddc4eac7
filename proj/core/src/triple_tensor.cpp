#include "spectriples/triple_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "spectriples/errors.hpp"

namespace spectriples {

namespace {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string to_string(TripleTensor::Source source) {
    return source == TripleTensor::Source::Exact ? "exact" : "mesh";
}

TripleTensor::TripleTensor(int cutoff, double volume, Source source,
                           double threshold, std::vector<double> eigenvalues,
                           std::vector<Entry> entries)
    : cutoff_(cutoff),
      volume_(volume),
      source_(source),
      threshold_(threshold),
      eigenvalues_(std::move(eigenvalues)) {
    entries_.reserve(entries.size());
    for (Entry e : entries) {
        if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= cutoff_ || e.j >= cutoff_ ||
            e.k >= cutoff_)
            throw Error("triple tensor entry index out of range");
        if (std::abs(e.value) < threshold_) continue;
        if (e.i > e.j) std::swap(e.i, e.j);
        entries_.push_back(e);
    }
    std::sort(entries_.begin(), entries_.end(), [this](const Entry& a, const Entry& b) {
        return key(a.i, a.j, a.k) < key(b.i, b.j, b.k);
    });
    // collapse mirrored duplicates, which must carry identical values
    std::vector<Entry> unique;
    unique.reserve(entries_.size());
    for (const Entry& e : entries_) {
        if (!unique.empty() && key(unique.back().i, unique.back().j, unique.back().k) ==
                                   key(e.i, e.j, e.k)) {
            if (unique.back().value != e.value)
                throw Error("triple tensor entries (i,j,k) and (j,i,k) disagree");
            continue;
        }
        unique.push_back(e);
    }
    entries_ = std::move(unique);
}

std::int64_t TripleTensor::key(int i, int j, int k) const {
    const std::int64_t n = cutoff_;
    return (static_cast<std::int64_t>(i) * n + j) * n + k;
}

std::complex<double> TripleTensor::at(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    const std::int64_t target = key(i, j, k);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), target,
                               [this](const Entry& e, std::int64_t t) {
                                   return key(e.i, e.j, e.k) < t;
                               });
    if (it != entries_.end() && key(it->i, it->j, it->k) == target) return it->value;
    return {0.0, 0.0};
}

std::size_t TripleTensor::nonzero_count() const {
    std::size_t count = 0;
    for (const Entry& e : entries_) count += (e.i == e.j) ? 1 : 2;
    return count;
}

bool TripleTensor::is_real(double tol) const {
    for (const Entry& e : entries_)
        if (std::abs(e.value.imag()) > tol) return false;
    return true;
}

void TripleTensor::dump(std::ostream& os) const {
    os << cutoff_ << ' ' << format_real(volume_) << ' ' << to_string(source_)
       << ' ' << format_real(threshold_) << '\n';
    std::vector<Entry> lines;
    lines.reserve(nonzero_count());
    for (const Entry& e : entries_) {
        lines.push_back(e);
        if (e.i != e.j) lines.push_back(Entry{e.j, e.i, e.k, e.value});
    }
    std::sort(lines.begin(), lines.end(), [this](const Entry& a, const Entry& b) {
        return key(a.i, a.j, a.k) < key(b.i, b.j, b.k);
    });
    for (const Entry& e : lines) {
        os << e.i << ' ' << e.j << ' ' << e.k << ' ' << format_real(e.value.real())
           << ' ' << format_real(e.value.imag()) << '\n';
    }
}

std::string TripleTensor::dump_string() const {
    std::ostringstream os;
    dump(os);
    return os.str();
}

void TripleTensor::dump_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    dump(os);
    if (!os) throw IoError("write failed: " + path);
}

TripleTensor TripleTensor::parse(std::istream& is) {
    int cutoff = 0;
    double volume = 0.0, threshold = 0.0;
    std::string source_tag;
    if (!(is >> cutoff >> volume >> source_tag >> threshold))
        throw IoError("triple tensor dump: malformed header");
    Source source;
    if (source_tag == "exact")
        source = Source::Exact;
    else if (source_tag == "mesh")
        source = Source::Mesh;
    else
        throw IoError("triple tensor dump: unknown source tag '" + source_tag + "'");
    if (cutoff < 1) throw IoError("triple tensor dump: cutoff must be >= 1");

    std::vector<Entry> entries;
    int i, j, k;
    double re, im;
    while (is >> i >> j >> k >> re >> im)
        entries.push_back(Entry{i, j, k, {re, im}});
    if (!is.eof() && is.fail()) {
        is.clear();
        std::string rest;
        std::getline(is, rest);
        throw IoError("triple tensor dump: malformed entry line near '" + rest + "'");
    }
    // stored entries already passed the threshold filter, so re-filtering
    // with the header threshold keeps them all and the round trip is exact
    return TripleTensor(cutoff, volume, source, threshold, {}, std::move(entries));
}

TripleTensor TripleTensor::parse_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    return parse(is);
}

}  // namespace spectriples
