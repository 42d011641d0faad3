//! Continuous-time arrival model.
//!
//! Every element receives an independent uniform arrival time on `[0,1]`;
//! sorting those times yields a uniformly random arrival order. The timeline
//! is cut into `k` windows `[(l−1)/k, l/k)` (the last one closed at 1) and
//! each window's times are mapped affinely back onto `[0,1]`.

use std::cmp::Ordering;

use rand::Rng;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arrival {
    pub element: usize,
    pub time: f64,
}

/// Arrivals sorted by time, ties broken by element id.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ArrivalSchedule {
    arrivals: Vec<Arrival>,
}

fn by_time_then_id(a: &Arrival, b: &Arrival) -> Ordering {
    a.time.total_cmp(&b.time).then(a.element.cmp(&b.element))
}

impl ArrivalSchedule {
    /// Schedule in which element `i` arrives at `times[i]`.
    pub fn from_times(times: &[f64]) -> Result<Self> {
        if let Some((i, t)) = times.iter().enumerate().find(|(_, t)| !(0.0..=1.0).contains(*t)) {
            return Err(Error::InvalidArgument(format!(
                "arrival time {t} of element {i} is outside [0,1]"
            )));
        }
        let mut arrivals: Vec<Arrival> = times
            .iter()
            .enumerate()
            .map(|(element, &time)| Arrival { element, time })
            .collect();
        arrivals.sort_by(by_time_then_id);
        Ok(Self { arrivals })
    }

    pub fn len(&self) -> usize {
        self.arrivals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrivals.is_empty()
    }

    pub fn arrivals(&self) -> &[Arrival] {
        &self.arrivals
    }

    /// Element ids in arrival order.
    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.arrivals.iter().map(|a| a.element)
    }
}

/// Draws an independent uniform arrival time for each of `n` elements.
pub fn sample_schedule<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ArrivalSchedule {
    let mut arrivals: Vec<Arrival> = (0..n)
        .map(|element| Arrival {
            element,
            time: rng.gen::<f64>(),
        })
        .collect();
    arrivals.sort_by(by_time_then_id);
    ArrivalSchedule { arrivals }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentItem {
    pub element: usize,
    pub time: f64,
    /// `k·time − (index − 1)`, the position inside the window rescaled to `[0,1]`.
    pub local_time: f64,
}

/// The elements arriving in window `index` (1-based) of `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub index: usize,
    pub k: usize,
    pub items: Vec<SegmentItem>,
}

impl Segment {
    /// Window `[start, end)` of this segment on the global clock.
    pub fn window(&self) -> (f64, f64) {
        let k = self.k as f64;
        ((self.index - 1) as f64 / k, self.index as f64 / k)
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn local_times(&self) -> Vec<f64> {
        self.items.iter().map(|it| it.local_time).collect()
    }
}

/// 1-based index of the window containing global time `t`.
pub fn segment_of(t: f64, k: usize) -> usize {
    ((t * k as f64).floor() as usize + 1).min(k)
}

fn local_time(t: f64, index: usize, k: usize) -> f64 {
    (t * k as f64 - (index - 1) as f64).clamp(0.0, 1.0)
}

/// Splits a schedule into `k` consecutive windows. Segments may be empty.
pub fn partition_segments(schedule: &ArrivalSchedule, k: usize) -> Result<Vec<Segment>> {
    if k == 0 {
        return Err(Error::Parameter("number of segments k must be at least 1".into()));
    }
    let mut segments: Vec<Segment> = (1..=k)
        .map(|index| Segment {
            index,
            k,
            items: Vec::new(),
        })
        .collect();
    for a in schedule.arrivals() {
        let index = segment_of(a.time, k);
        segments[index - 1].items.push(SegmentItem {
            element: a.element,
            time: a.time,
            local_time: local_time(a.time, index, k),
        });
    }
    Ok(segments)
}

/// Recomputes every item's local time from its global time.
pub fn rescale_local_times(segment: &Segment) -> Segment {
    Segment {
        index: segment.index,
        k: segment.k,
        items: segment
            .items
            .iter()
            .map(|it| SegmentItem {
                local_time: local_time(it.time, segment.index, segment.k),
                ..*it
            })
            .collect(),
    }
}
