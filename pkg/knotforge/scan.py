# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

import logging
import threading

logger = logging.getLogger(__name__)


class _worker(threading.Thread):

    def __init__(self, evaluate, lo, hi):
        super(_worker, self).__init__()
        self.daemon = True
        self._evaluate = evaluate
        self._lo = lo
        self._hi = hi
        self.result = None

    def run(self):
        self.exc = None
        try:
            self.result = self._evaluate(self._lo, self._hi)
        except BaseException as e:
            self.exc = e

    def join(self):
        super(_worker, self).join()
        if self.exc:
            e = self.exc
            self.exc = None
            raise e


def scan(evaluate, start, stop, chunk, workers=1):
    """
    Scan the integers ``[start, stop)`` chunk by chunk and return the first
    chunk's hit.

    :param evaluate: ``evaluate(lo, hi)`` returns ``None`` or a hit for the
        candidates ``lo <= n < hi``; it must return the smallest hit of its chunk.
    :param workers: number of chunks evaluated concurrently. The result is the
        same for any number of workers.
    :returns: the pair ``(hit, candidates_scanned)``, ``hit`` being ``None``
        when the range is exhausted.
    """
    assert chunk > 0 and workers > 0
    lo = start
    while lo < stop:
        threads = []
        for _ in range(workers):
            if lo >= stop:
                break
            hi = min(lo + chunk, stop)
            threads.append(_worker(evaluate, lo, hi))
            lo = hi

        for t in threads:
            t.start()
        for t in threads:
            t.join()

        for t in threads:
            if t.result is not None:
                logger.debug("hit in chunk [%d, %d)", t._lo, t._hi)
                return t.result, t._hi - start
    return None, stop - start
