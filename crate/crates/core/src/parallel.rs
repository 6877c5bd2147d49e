//! Order-preserving parallel map over a fixed worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Applies `f` to every item with up to `workers` threads; results keep the
/// input order regardless of completion order.
pub fn par_map<T: Sync, R: Send>(workers: usize, items: Vec<T>, f: impl Fn(T) -> R + Sync) -> Vec<R>
where
    T: Send,
{
    if workers <= 1 || items.len() <= 1 {
        return items.into_iter().map(f).collect();
    }
    let n = items.len();
    let slots: Vec<Mutex<Option<T>>> = items.into_iter().map(|t| Mutex::new(Some(t))).collect();
    let out: Vec<Mutex<Option<R>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..workers.min(n) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let item = slots[i].lock().expect("slot").take().expect("taken once");
                *out[i].lock().expect("slot") = Some(f(item));
            });
        }
    });
    out.into_iter().map(|m| m.into_inner().expect("slot").expect("filled")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_order() {
        let v = par_map(3, (0..20).collect(), |i: usize| i * i);
        assert_eq!(v, (0..20).map(|i| i * i).collect::<Vec<_>>());
    }
}
