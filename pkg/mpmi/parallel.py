"""
Ordered parallel map on dask.
"""
import dask

from mpmi.base import output

def map_ordered(fun, items, n_workers=1, label='task'):
    """
    Return ``[fun(item) for item in items]``, evaluated in parallel.

    With `n_workers` <= 1 the synchronous dask scheduler is used, otherwise a
    dask.distributed LocalCluster with `n_workers` single-threaded workers.
    The results are in the order of `items` regardless of completion order.
    """
    items = list(items)
    if n_workers <= 1:
        tasks = [dask.delayed(fun)(item) for item in items]
        return list(dask.compute(*tasks, scheduler='synchronous'))

    from dask.distributed import as_completed, Client, LocalCluster

    cluster = LocalCluster(n_workers=n_workers, threads_per_worker=1)
    client = Client(cluster)
    try:
        futures = client.map(fun, items, pure=False)
        for ii, _ in enumerate(as_completed(futures)):
            output('{} {} of {} completed'.format(label, ii + 1, len(items)),
                   verbose=(ii + 1) % max(len(items) // 10, 1) == 0)

        results = client.gather(futures)

    finally:
        client.close()
        cluster.close()

    return results
