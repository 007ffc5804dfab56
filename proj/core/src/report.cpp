#include "nmvkit/report.hpp"

#include <algorithm>

namespace nmvkit {

void CheckReport::add(std::string id, std::string statement, Verdict verdict,
                      std::vector<Elem> witness) {
    if (find(id) != nullptr) throw std::logic_error("duplicate law id '" + id + "' in report");
    laws_.push_back({std::move(id), std::move(statement), verdict, std::move(witness)});
}

void CheckReport::add(std::string id, std::string statement, const CheckResult& result) {
    add(std::move(id), std::move(statement), result.holds ? Verdict::pass : Verdict::fail,
        result.witness);
}

bool CheckReport::ok() const noexcept {
    return std::none_of(laws_.begin(), laws_.end(),
                        [](const LawResult& l) { return l.verdict == Verdict::fail; });
}

bool CheckReport::all_passed() const noexcept {
    return std::all_of(laws_.begin(), laws_.end(),
                       [](const LawResult& l) { return l.verdict == Verdict::pass; });
}

int CheckReport::failed_count() const noexcept {
    return static_cast<int>(std::count_if(laws_.begin(), laws_.end(), [](const LawResult& l) {
        return l.verdict == Verdict::fail;
    }));
}

const LawResult* CheckReport::find(std::string_view id) const noexcept {
    auto it = std::find_if(laws_.begin(), laws_.end(),
                           [&](const LawResult& l) { return l.id == id; });
    return it == laws_.end() ? nullptr : &*it;
}

}  // namespace nmvkit
