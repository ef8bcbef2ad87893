#include "ballvol/space.hpp"

#include <charconv>
#include <sstream>

namespace ballvol {

SpaceSpec SpaceSpec::hamming(int q, int n) {
    SpaceSpec s{SpaceKind::hamming, q, n, 0};
    s.validate();
    return s;
}

SpaceSpec SpaceSpec::johnson(int n, int w) {
    SpaceSpec s{SpaceKind::johnson, 2, n, w};
    s.validate();
    return s;
}

SpaceSpec SpaceSpec::permutation(int n) {
    SpaceSpec s{SpaceKind::permutation, 2, n, 0};
    s.validate();
    return s;
}

void SpaceSpec::validate() const {
    if (n < 1) throw std::invalid_argument("space: n must be >= 1");
    switch (kind) {
        case SpaceKind::hamming:
            if (q < 2) throw std::invalid_argument("hamming space: q must be >= 2");
            break;
        case SpaceKind::johnson:
            if (w <= 0 || w >= n)
                throw std::invalid_argument("johnson space: need 0 < w < n");
            break;
        case SpaceKind::permutation:
            break;
    }
}

BigCount SpaceSpec::point_count() const {
    switch (kind) {
        case SpaceKind::hamming: {
            BigCount r;
            mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q),
                          static_cast<unsigned long>(n));
            return r;
        }
        case SpaceKind::johnson:
            return binomial(n, w);
        default:
            return factorial(n);
    }
}

int SpaceSpec::diameter() const {
    switch (kind) {
        case SpaceKind::hamming: return n;
        case SpaceKind::johnson: return std::min(w, n - w);
        default: return n;
    }
}

const char* SpaceSpec::kind_name() const {
    switch (kind) {
        case SpaceKind::hamming: return "hamming";
        case SpaceKind::johnson: return "johnson";
        default: return "permutation";
    }
}

void check_point(const SpaceSpec& s, const Point& p) {
    switch (s.kind) {
        case SpaceKind::hamming:
            if (static_cast<int>(p.size()) != s.n)
                throw std::invalid_argument("point: word length mismatch");
            for (int v : p)
                if (v < 0 || v >= s.q) throw std::invalid_argument("point: symbol out of range");
            return;
        case SpaceKind::johnson: {
            if (static_cast<int>(p.size()) != s.w)
                throw std::invalid_argument("point: subset size mismatch");
            for (int j = 0; j < s.w; ++j) {
                if (p[j] < 0 || p[j] >= s.n)
                    throw std::invalid_argument("point: index out of range");
                if (j > 0 && p[j] <= p[j - 1])
                    throw std::invalid_argument("point: subset must be strictly increasing");
            }
            return;
        }
        case SpaceKind::permutation: {
            if (static_cast<int>(p.size()) != s.n)
                throw std::invalid_argument("point: permutation length mismatch");
            std::vector<char> seen(s.n, 0);
            for (int v : p) {
                if (v < 0 || v >= s.n || seen[v])
                    throw std::invalid_argument("point: not a permutation");
                seen[v] = 1;
            }
            return;
        }
    }
}

int distance(const SpaceSpec& s, const Point& x, const Point& y) {
    check_point(s, x);
    check_point(s, y);
    switch (s.kind) {
        case SpaceKind::hamming:
        case SpaceKind::permutation: {
            int d = 0;
            for (size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
            return d;
        }
        case SpaceKind::johnson: {
            // |x \ y| over sorted lists
            int common = 0;
            size_t i = 0, j = 0;
            while (i < x.size() && j < y.size()) {
                if (x[i] == y[j]) ++common, ++i, ++j;
                else if (x[i] < y[j]) ++i;
                else ++j;
            }
            return s.w - common;
        }
    }
    return 0;
}

BigCount shell_volume(const SpaceSpec& s, int rho) {
    s.validate();
    if (rho < 0 || rho > s.diameter())
        throw std::invalid_argument("shell_volume: radius out of range");
    switch (s.kind) {
        case SpaceKind::hamming: {
            BigCount pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(s.q - 1),
                          static_cast<unsigned long>(rho));
            return binomial(s.n, rho) * pw;
        }
        case SpaceKind::johnson:
            return binomial(s.w, rho) * binomial(s.n - s.w, rho);
        default:
            return binomial(s.n, rho) * derangements(rho);
    }
}

VolumeProfile ball_volume(const SpaceSpec& s, int r) {
    s.validate();
    if (r < 0 || r > s.diameter()) throw std::invalid_argument("ball_volume: radius out of range");
    VolumeProfile vp;
    vp.space = s;
    vp.radius = r;
    vp.shell_volumes.reserve(r + 1);
    for (int i = 0; i <= r; ++i) {
        vp.shell_volumes.push_back(shell_volume(s, i));
        vp.volume += vp.shell_volumes.back();
    }
    return vp;
}

Point origin_point(const SpaceSpec& s) {
    s.validate();
    switch (s.kind) {
        case SpaceKind::hamming: return Point(s.n, 0);
        case SpaceKind::johnson: {
            Point p(s.w);
            std::iota(p.begin(), p.end(), 0);
            return p;
        }
        default: {
            Point p(s.n);
            std::iota(p.begin(), p.end(), 0);
            return p;
        }
    }
}

Point canonical_partner(const SpaceSpec& s, int k) {
    s.validate();
    if (k < 0 || k > s.diameter())
        throw std::invalid_argument("canonical_partner: distance out of range");
    Point p = origin_point(s);
    switch (s.kind) {
        case SpaceKind::hamming:
            for (int i = 0; i < k; ++i) p[i] = 1;
            return p;
        case SpaceKind::johnson:
            for (int i = 0; i < k; ++i) p[s.w - k + i] = s.w + i;
            return p;
        default:
            if (k == 1)
                throw std::invalid_argument(
                    "canonical_partner: no permutation lies at distance 1");
            for (int i = 0; i < k; ++i) p[i] = (i + 1) % k;
            return p;
    }
}

std::uint64_t checked_point_count(const SpaceSpec& s, std::uint64_t cap) {
    BigCount total = s.point_count();
    if (!total.fits_ulong_p() || total.get_ui() > cap)
        throw BudgetExceeded("space too large: " + total.get_str() + " points exceeds cap " +
                             std::to_string(cap));
    return total.get_ui();
}

std::uint64_t point_rank(const SpaceSpec& s, const Point& p) {
    check_point(s, p);
    switch (s.kind) {
        case SpaceKind::hamming: {
            std::uint64_t r = 0;
            for (int v : p) r = r * s.q + static_cast<std::uint64_t>(v);
            return r;
        }
        case SpaceKind::johnson: {
            // combinadic rank: count subsets lexicographically before p
            std::uint64_t r = 0;
            int prev = -1;
            for (int j = 0; j < s.w; ++j) {
                for (int v = prev + 1; v < p[j]; ++v)
                    r += binomial(s.n - 1 - v, s.w - 1 - j).get_ui();
                prev = p[j];
            }
            return r;
        }
        default: {
            // Lehmer code
            std::uint64_t r = 0;
            for (int i = 0; i < s.n; ++i) {
                int smaller = 0;
                for (int j = i + 1; j < s.n; ++j) smaller += p[j] < p[i];
                r = r * (s.n - i) + static_cast<std::uint64_t>(smaller);
            }
            return r;
        }
    }
}

Point point_at_rank(const SpaceSpec& s, std::uint64_t rank) {
    s.validate();
    switch (s.kind) {
        case SpaceKind::hamming: {
            Point p(s.n);
            for (int i = s.n - 1; i >= 0; --i) {
                p[i] = static_cast<int>(rank % s.q);
                rank /= s.q;
            }
            if (rank != 0) throw std::invalid_argument("point_at_rank: rank out of range");
            return p;
        }
        case SpaceKind::johnson: {
            Point p;
            p.reserve(s.w);
            int v = 0;
            for (int j = 0; j < s.w; ++j) {
                for (;; ++v) {
                    if (v > s.n - (s.w - j)) throw std::invalid_argument("point_at_rank: rank out of range");
                    std::uint64_t block = binomial(s.n - 1 - v, s.w - 1 - j).get_ui();
                    if (rank < block) break;
                    rank -= block;
                }
                p.push_back(v++);
            }
            if (rank != 0) throw std::invalid_argument("point_at_rank: rank out of range");
            return p;
        }
        default: {
            std::vector<int> avail(s.n);
            std::iota(avail.begin(), avail.end(), 0);
            std::vector<std::uint64_t> digits(s.n);
            for (int i = s.n - 1; i >= 0; --i) {
                digits[i] = rank % (s.n - i);
                rank /= (s.n - i);
            }
            if (rank != 0) throw std::invalid_argument("point_at_rank: rank out of range");
            Point p(s.n);
            for (int i = 0; i < s.n; ++i) {
                p[i] = avail[digits[i]];
                avail.erase(avail.begin() + static_cast<long>(digits[i]));
            }
            return p;
        }
    }
}

std::string format_point(const SpaceSpec& s, const Point& p) {
    std::ostringstream os;
    switch (s.kind) {
        case SpaceKind::hamming:
            if (s.q <= 10) {
                for (int v : p) os << v;
            } else {
                for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
            }
            return os.str();
        case SpaceKind::johnson: {
            os << '{';
            for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i] + 1;
            os << '}';
            return os.str();
        }
        default: {
            os << '(';
            for (size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i] + 1;
            os << ')';
            return os.str();
        }
    }
}

namespace {

std::vector<int> split_ints(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == '[' || ch == ']') continue;
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) {
                out.push_back(std::stoi(cur));
                cur.clear();
            }
            continue;
        }
        cur += ch;
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

}  // namespace

Point parse_point(const SpaceSpec& s, const std::string& text) {
    Point p;
    switch (s.kind) {
        case SpaceKind::hamming:
            if (s.q <= 10 && text.find(',') == std::string::npos) {
                for (char ch : text) {
                    if (ch == ' ') continue;
                    if (ch < '0' || ch > '9')
                        throw std::invalid_argument("parse_point: bad symbol in word");
                    p.push_back(ch - '0');
                }
            } else {
                p = split_ints(text);
            }
            break;
        case SpaceKind::johnson:
        case SpaceKind::permutation:
            p = split_ints(text);
            for (int& v : p) --v;  // rendered 1-based
            break;
    }
    check_point(s, p);
    return p;
}

std::vector<int> complement_sorted(const std::vector<int>& subset, int n) {
    std::vector<int> out;
    out.reserve(n - subset.size());
    size_t j = 0;
    for (int v = 0; v < n; ++v) {
        if (j < subset.size() && subset[j] == v) {
            ++j;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace ballvol
