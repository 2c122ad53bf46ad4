#! python3.11

#    This module is a part of the ftpolytope package.
#
#    This program is libre software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
#    See the LICENSE file for more details.

'''
Run one check over many instances with a fixed amount of concurrency: a producer feeds a bounded task queue, a fixed
pool of consumers pulls from it and runs the (synchronous, CPU-bound) check in a worker thread, and a serializer
collects the results. This is the usual structured-concurrency shape from `trio`, with "tasks close their channel".

Checks must be pure functions of their argument. Results come back sorted by input position regardless of completion
order, so a batch is reproducible. The first failing check cancels the rest, and its exception propagates as itself
rather than wrapped in an exception group.
'''

import logging
import sys
from typing import Callable, Iterable, TypeVar

import trio

if sys.version_info < (3, 11):
    from exceptiongroup import BaseExceptionGroup

__all__ = ['DefaultConcurrency', 'run_batch']

_log = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')

DefaultConcurrency = 4

########################################################################################################################

async def _producer(send_taskqueue:trio.MemorySendChannel, items:Iterable):
    n = 0
    async with send_taskqueue:
        for item in enumerate(items):
            await send_taskqueue.send(item)
            n += 1
    _log.debug(f"taskqueued {n} instances")

async def _consumer(check, limiter:trio.CapacityLimiter, recv_taskqueue:trio.MemoryReceiveChannel,
                                                         send_serialize:trio.MemorySendChannel):
    async with recv_taskqueue, send_serialize:
        async for index, item in recv_taskqueue:
            result = await trio.to_thread.run_sync(check, item, limiter=limiter)
            await send_serialize.send((index, result))

async def _serializer(recv_serialize:trio.MemoryReceiveChannel, collector:list):
    async with recv_serialize:
        async for val in recv_serialize:
            collector.append(val)
            if len(collector) & 0x3F == 0:
                _log.info(f"checked {len(collector)} instances")

async def _mass_check(items, check, concurrency):
    results = []
    limiter = trio.CapacityLimiter(concurrency)
    async with trio.open_nursery() as nursery:
        send_taskqueue, recv_taskqueue = trio.open_memory_channel(concurrency)
        nursery.start_soon(_producer, send_taskqueue, items)
        send_serialize, recv_serialize = trio.open_memory_channel(concurrency)
        nursery.start_soon(_serializer, recv_serialize, results)
        async with recv_taskqueue, send_serialize:
            for _ in range(concurrency):
                nursery.start_soon(_consumer, check, limiter, recv_taskqueue.clone(), send_serialize.clone())
    return results

def _first_leaf(exc:BaseException) -> BaseException:
    while isinstance(exc, BaseExceptionGroup):
        exc = exc.exceptions[0]
    return exc

def run_batch(items:Iterable[T], check:Callable[[T], R], concurrency:int=DefaultConcurrency) -> list[R]:
    '''
    `[check(item) for item in items]`, computed by `concurrency` worker threads. Blocks until done. Exceptions raised
    by `check` are re-raised here unchanged.
    '''
    if concurrency < 1:
        raise ValueError(f"{concurrency=} must be positive")
    try:
        indexed = trio.run(_mass_check, items, check, concurrency)
    except BaseExceptionGroup as group:
        raise _first_leaf(group) from None
    indexed.sort(key=lambda pair: pair[0])
    _log.info(f"batch complete: {len(indexed)} instances")
    return [result for _, result in indexed]
