use std::ffi::{CStr, CString};
use std::ptr;

use eph_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(eph_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn new_curve(m: i32, omega: f64, dim: usize, pts: &[f64]) -> (EphStatus, *mut EphCurve) {
    let mut c = ptr::null_mut();
    let s = unsafe { eph_curve_new(m, omega, dim, pts.as_ptr(), pts.len(), &mut c) };
    (s, c)
}

const PTS3: [f64; 12] = [0.0, 0.0, 0.0, 1.0, 0.5, 0.2, 2.0, -0.3, 0.1, 3.0, 1.0, 0.7];

#[test]
fn evaluation_through_a_handle() {
    let (s, c) = new_curve(1, 2.0, 3, &PTS3);
    assert_eq!(s, EphStatus::Ok);
    assert_eq!(
        unsafe { (eph_curve_order(c), eph_curve_dim(c), eph_curve_omega(c)) },
        (1, 3, 2.0)
    );
    let mut grid = [0.0; 15];
    let s = unsafe {
        eph_curve_eval_grid(
            c,
            5,
            EPH_METHOD_WOZNY_CHUDY,
            EPH_MODE_AUTO,
            grid.as_mut_ptr(),
        )
    };
    assert_eq!(s, EphStatus::Ok);
    assert_eq!(&grid[..3], &PTS3[..3]);
    assert_eq!(&grid[12..], &PTS3[9..]);
    for (k, row) in grid.chunks(3).enumerate() {
        let mut p = [0.0; 3];
        let s = unsafe {
            eph_curve_eval(
                c,
                k as f64 / 4.0,
                EPH_METHOD_DECASTELJAU,
                EPH_MODE_AUTO,
                p.as_mut_ptr(),
            )
        };
        assert_eq!(s, EphStatus::Ok);
        for (a, b) in p.iter().zip(row) {
            assert!((a - b).abs() < 1e-12);
        }
    }
    let mut d = [0.0; 3];
    assert_eq!(
        unsafe { eph_curve_derivative(c, 0.0, d.as_mut_ptr()) },
        EphStatus::Ok
    );
    let mut back = [0.0; 12];
    assert_eq!(
        unsafe { eph_curve_control_points(c, back.as_mut_ptr(), 12) },
        EphStatus::Ok
    );
    assert_eq!(back, PTS3);
    assert_eq!(
        unsafe { eph_curve_control_points(c, back.as_mut_ptr(), 11) },
        EphStatus::BufferTooSmall
    );
    unsafe { eph_curve_free(c) };
}

#[test]
fn status_codes() {
    assert_eq!(new_curve(3, 1.0, 3, &PTS3).0, EphStatus::InvalidArgument);
    assert_eq!(new_curve(1, -1.0, 3, &PTS3).0, EphStatus::Domain);
    assert_eq!(
        new_curve(1, 1.0, 3, &PTS3[..9]).0,
        EphStatus::InvalidArgument
    );
    assert!(last_error().contains("expected 12"), "{}", last_error());
    assert_eq!(
        unsafe { eph_curve_new(1, 1.0, 3, ptr::null(), 12, &mut ptr::null_mut()) },
        EphStatus::NullPointer
    );

    let (_, c) = new_curve(1, 800.0, 3, &PTS3);
    let mut p = [0.0; 3];
    let eval = |t: f64, method: i32, mode: i32, p: &mut [f64; 3]| unsafe {
        eph_curve_eval(c, t, method, mode, p.as_mut_ptr())
    };
    assert_eq!(
        eval(0.5, EPH_METHOD_NEW, EPH_MODE_NAIVE, &mut p),
        EphStatus::OverflowHazard
    );
    assert_eq!(
        eval(-0.1, EPH_METHOD_NEW, EPH_MODE_AUTO, &mut p),
        EphStatus::Domain
    );
    assert_eq!(
        eval(0.5, 17, EPH_MODE_AUTO, &mut p),
        EphStatus::InvalidArgument
    );
    assert_eq!(
        eval(0.5, EPH_METHOD_NEW, 9, &mut p),
        EphStatus::InvalidArgument
    );
    assert_eq!(
        eval(0.5, EPH_METHOD_NEW, EPH_MODE_AUTO, &mut p),
        EphStatus::Ok
    );
    assert_eq!(
        unsafe {
            eph_curve_eval(
                ptr::null(),
                0.5,
                EPH_METHOD_NEW,
                EPH_MODE_AUTO,
                p.as_mut_ptr(),
            )
        },
        EphStatus::NullPointer
    );
    unsafe { eph_curve_free(c) };
    unsafe { eph_curve_free(ptr::null_mut()) };

    let msg = unsafe { CStr::from_ptr(eph_status_str(EphStatus::ZeroVector)) };
    assert_eq!(msg.to_str().unwrap(), "zero vector");
}

#[test]
fn basis_values() {
    let mut out = [0.0; 6];
    assert_eq!(
        unsafe { eph_basis_phi(2, 50.0, 0.3, EPH_MODE_STABLE, out.as_mut_ptr()) },
        EphStatus::Ok
    );
    assert!((out.iter().sum::<f64>() - 1.0).abs() < 1e-13);
    assert_eq!(
        unsafe { eph_basis_phi(2, 50.0, 1.3, EPH_MODE_AUTO, out.as_mut_ptr()) },
        EphStatus::Domain
    );
}

#[test]
fn hermite_interpolants() {
    let (r0, r1, di, df) = ([0.1, -0.5], [0.4, 0.15], [-3.5, 10.0], [6.5, 2.3]);
    for tag in [EPH_TAG_PP, EPH_TAG_PM, EPH_TAG_MP, EPH_TAG_MM] {
        let mut c = ptr::null_mut();
        let s = unsafe {
            eph_hermite_planar(
                r0.as_ptr(),
                r1.as_ptr(),
                di.as_ptr(),
                df.as_ptr(),
                8.0,
                tag,
                &mut c,
            )
        };
        assert_eq!(s, EphStatus::Ok);
        let mut end = [0.0; 2];
        unsafe { eph_curve_eval(c, 1.0, EPH_METHOD_DIRECT, EPH_MODE_AUTO, end.as_mut_ptr()) };
        assert!((end[0] - r1[0]).abs() < 1e-12 && (end[1] - r1[1]).abs() < 1e-12);
        let mut d0 = [0.0; 2];
        unsafe { eph_curve_derivative(c, 0.0, d0.as_mut_ptr()) };
        assert!((d0[0] - di[0]).abs() < 1e-9 && (d0[1] - di[1]).abs() < 1e-9);
        unsafe { eph_curve_free(c) };
    }

    let zero = [0.0; 3];
    let v = [1.0, 0.0, 0.5];
    let mut c = ptr::null_mut();
    let s = unsafe {
        eph_hermite_spatial(
            zero.as_ptr(),
            v.as_ptr(),
            zero.as_ptr(),
            v.as_ptr(),
            1.0,
            0.0,
            0.0,
            0.0,
            &mut c,
        )
    };
    assert_eq!(s, EphStatus::ZeroVector);
    assert!(c.is_null());
    let neg = [-1.0, 0.0, 0.0];
    let s = unsafe {
        eph_hermite_spatial(
            zero.as_ptr(),
            v.as_ptr(),
            neg.as_ptr(),
            v.as_ptr(),
            1.0,
            0.0,
            0.0,
            0.0,
            &mut c,
        )
    };
    assert_eq!(s, EphStatus::DegenerateDirection);
}

#[test]
fn preimage_curve_and_arc_length() {
    let coeffs = [1.0, 0.2, 0.0, 0.0, 0.5, 0.0, 1.0, 0.0, 0.0, 0.3, 0.0, 1.0];
    let r0 = [1.0, 2.0, 3.0];
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { eph_preimage_curve(2, 1.5, coeffs.as_ptr(), r0.as_ptr(), &mut c) },
        EphStatus::Ok
    );
    let mut p = [0.0; 3];
    unsafe { eph_curve_eval(c, 0.0, EPH_METHOD_NEW, EPH_MODE_AUTO, p.as_mut_ptr()) };
    assert_eq!(p, r0);

    // arc length against a chord sum
    let n = 4000;
    let mut prev = r0;
    let mut chords = 0.0;
    for k in 1..=n {
        let mut q = [0.0; 3];
        unsafe {
            eph_curve_eval(
                c,
                k as f64 / n as f64,
                EPH_METHOD_DIRECT,
                EPH_MODE_AUTO,
                q.as_mut_ptr(),
            )
        };
        chords += q
            .iter()
            .zip(&prev)
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt();
        prev = q;
    }
    let mut s = 0.0;
    assert_eq!(
        unsafe { eph_preimage_arc_length(2, 1.5, coeffs.as_ptr(), 1.0, &mut s) },
        EphStatus::Ok
    );
    assert!((s - chords).abs() < 1e-5 * s, "{s} vs {chords}");
    unsafe { eph_curve_free(c) };
}

#[test]
fn json_round_trip() {
    let (_, c) = new_curve(1, 2.0, 3, &PTS3);
    let mut need = 0;
    assert_eq!(
        unsafe { eph_curve_to_json(c, ptr::null_mut(), 0, &mut need) },
        EphStatus::BufferTooSmall
    );
    let mut buf = vec![0u8; need];
    assert_eq!(
        unsafe { eph_curve_to_json(c, buf.as_mut_ptr().cast(), need, ptr::null_mut()) },
        EphStatus::Ok
    );
    let json = CStr::from_bytes_with_nul(&buf).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { eph_curve_from_json(json.as_ptr(), &mut d) },
        EphStatus::Ok
    );
    let mut pts = [0.0; 12];
    unsafe { eph_curve_control_points(d, pts.as_mut_ptr(), 12) };
    assert_eq!(pts, PTS3);
    let bad = CString::new("{\"m\": 5}").unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(
        unsafe { eph_curve_from_json(bad.as_ptr(), &mut e) },
        EphStatus::InvalidArgument
    );
    assert!(e.is_null());
    unsafe {
        eph_curve_free(c);
        eph_curve_free(d);
    }
}
