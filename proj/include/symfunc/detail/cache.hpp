#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace symfunc::detail {

// Map whose entries never change once inserted. Values are computed outside
// the lock, so two threads may both compute a missing entry; the first
// insertion wins and both see the same stored value.
template <class K, class V, class Compare = std::less<K>>
class WriteOnceCache {
public:
    template <class F>
    const V& get(const K& key, F compute) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<V>(compute());
        std::unique_lock lock(mu_);
        auto it = map_.try_emplace(key, std::move(value)).first;
        return *it->second;
    }

private:
    std::shared_mutex mu_;
    std::map<K, std::unique_ptr<V>, Compare> map_;
};

}  // namespace symfunc::detail
