# -*- coding: utf-8 -*-
"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
"""
Minimal bounded memoization.

Used for monomial normal forms (keyed by ring and exponent vector),
and for the construction of projective spaces and formal bases.
All cached values are immutable. Lookups, insertions and evictions hold a per function lock,
so caches can be shared between threads.

Thanks to Hugh Brown for the original recipe:
https://gist.github.com/hughdbrown/bf5c63792d5f912a162bf012fb6b4527
"""
from functools import wraps
from threading import Lock

_max_size = 4096 * 4


def lru_cache(user_function):
    """
    Caches the results of user_function, keyed by its positional arguments.

    When the cache is full, the oldest entry is dropped.
    The wrapper exposes cache_clear() and cache_info() (hits, misses, size).

    Example:

        >>> @lru_cache
        ... def square(x):
        ...     return x * x
        >>> square(3), square(3)
        (9, 9)
        >>> square.cache_info()
        {'hits': 1, 'misses': 1, 'size': 1}
    """
    cache = {}
    stats = [0, 0]  # hits, misses
    lock = Lock()

    @wraps(user_function)
    def wrapper(*args):
        key = tuple(args)
        with lock:
            if key in cache:
                stats[0] += 1
                return cache[key]
            stats[1] += 1
        # computed outside the lock: user_function may recurse into the cache
        result = user_function(*args)
        with lock:
            if key not in cache and len(cache) >= _max_size:
                cache.pop(next(iter(cache)))
            cache.setdefault(key, result)
            return cache[key]

    def cache_clear():
        with lock:
            cache.clear()
            stats[0] = stats[1] = 0

    def cache_info():
        with lock:
            return {'hits': stats[0], 'misses': stats[1], 'size': len(cache)}

    wrapper.cache_clear = cache_clear
    wrapper.cache_info = cache_info

    return wrapper
