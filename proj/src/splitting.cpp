#include "uvb/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uvb {

int SplittingType::total_rank() const {
    return std::accumulate(ranks.begin(), ranks.end(), 0);
}

bool SplittingType::is_normalized() const {
    return !twists.empty() && twists.back() == 0;
}

bool SplittingType::is_consecutive() const {
    for (size_t i = 0; i + 1 < twists.size(); ++i)
        if (twists[i] - twists[i + 1] != 1) return false;
    return true;
}

bool SplittingType::has_gap() const {
    for (size_t i = 0; i + 1 < twists.size(); ++i)
        if (twists[i] - twists[i + 1] >= 2) return true;
    return false;
}

int SplittingType::normalize() {
    int shift = twists.empty() ? 0 : twists.back();
    for (int& u : twists) u -= shift;
    return shift;
}

std::vector<int> SplittingType::line_multiset() const {
    std::vector<int> out;
    for (size_t i = 0; i < ranks.size(); ++i)
        out.insert(out.end(), ranks[i], twists[i]);
    return out;
}

std::string SplittingType::to_string() const {
    std::ostringstream os;
    os << ranks.size() << ";";
    for (size_t i = 0; i < ranks.size(); ++i) os << (i ? "," : "") << ranks[i];
    os << ";";
    for (size_t i = 0; i < twists.size(); ++i) os << (i ? "," : "") << twists[i];
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("bad integer '" + item + "' in splitting type");
        out.push_back(v);
    }
    return out;
}

}  // namespace

SplittingType SplittingType::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto p1 = s.find(';');
    auto p2 = s.find(';', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("splitting type must be 'k;r1,...,rk;u1,...,uk'");
    int k = std::stoi(s.substr(0, p1));
    SplittingType st;
    st.ranks = parse_int_list(s.substr(p1 + 1, p2 - p1 - 1));
    st.twists = parse_int_list(s.substr(p2 + 1));
    if (k <= 0 || st.ranks.size() != static_cast<size_t>(k) ||
        st.twists.size() != static_cast<size_t>(k))
        throw std::invalid_argument("splitting type part count mismatch in '" + text + "'");
    for (int r : st.ranks)
        if (r <= 0) throw std::invalid_argument("splitting type ranks must be positive");
    for (size_t i = 0; i + 1 < st.twists.size(); ++i)
        if (st.twists[i] <= st.twists[i + 1])
            throw std::invalid_argument("splitting type twists must be strictly decreasing");
    return st;
}

SplittingType SplittingType::consecutive(std::vector<int> ranks) {
    SplittingType st;
    int k = static_cast<int>(ranks.size());
    st.ranks = std::move(ranks);
    st.twists.resize(k);
    for (int i = 0; i < k; ++i) st.twists[i] = k - 1 - i;
    return st;
}

SplittingType SplittingType::from_multiset(std::vector<int> degrees) {
    if (degrees.empty()) throw std::invalid_argument("empty line multiset");
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    SplittingType st;
    for (int d : degrees) {
        if (!st.twists.empty() && st.twists.back() == d) {
            ++st.ranks.back();
        } else {
            st.twists.push_back(d);
            st.ranks.push_back(1);
        }
    }
    return st;
}

SplittingType dualize_type(const SplittingType& st) {
    SplittingType d;
    int k = st.parts();
    d.ranks.assign(st.ranks.rbegin(), st.ranks.rend());
    d.twists.resize(k);
    for (int i = 0; i < k; ++i) d.twists[i] = st.twists[0] - st.twists[k - 1 - i];
    return d;
}

}  // namespace uvb
